#pragma once

// Dense matrices over arbitrary-precision integers: Kronecker products and exact
// determinants.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ecclab/errors.hpp"

namespace ecclab {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw input_error("ragged matrix literal");
      for (long long x : row) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

inline IntMatrix operator*(const BigInt& scalar, const IntMatrix& m) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= scalar;
  }
  return out;
}

// Block matrix whose (i,j) block is b(i,j) * a. For square a (n x n) and b (p x p),
// det = det(a)^p * det(b)^n regardless of which factor scales the blocks.
inline IntMatrix kronecker_matrix(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t bi = 0; bi < b.rows(); ++bi) {
    for (std::size_t bj = 0; bj < b.cols(); ++bj) {
      const BigInt& scale = b(bi, bj);
      if (scale == 0) continue;
      for (std::size_t ai = 0; ai < a.rows(); ++ai) {
        for (std::size_t aj = 0; aj < a.cols(); ++aj) {
          out(bi * a.rows() + ai, bj * a.cols() + aj) = scale * a(ai, aj);
        }
      }
    }
  }
  return out;
}

inline IntMatrix antidiagonal_j(std::size_t size) {
  if (size == 0) throw input_error("antidiagonal_j needs size >= 1");
  IntMatrix j(size, size);
  for (std::size_t i = 0; i < size; ++i) j(i, size - 1 - i) = 1;
  return j;
}

// Bareiss fraction-free elimination. Every division is exact, so the result is the
// determinant with no rounding.
inline BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw input_error("determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix work = m;
  BigInt previous_pivot = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (work(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && work(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(work(k, j), work(swap_row, j));
      negate = !negate;
    }
    const BigInt pivot = work(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt lead = work(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt value = work(i, j) * pivot - lead * work(k, j);
        value /= previous_pivot;
        work(i, j) = std::move(value);
      }
      work(i, k) = 0;
    }
    previous_pivot = pivot;
  }
  BigInt det = work(n - 1, n - 1);
  return negate ? BigInt(-det) : det;
}

inline constexpr std::size_t kLeibnizSideLimit = 9;

namespace detail {

// Depth-first walk over permutations carrying the running product of chosen entries,
// so shared prefixes are multiplied once. Zero entries prune the walk.
inline void leibniz_walk(const IntMatrix& m, std::size_t row, std::vector<bool>& used,
                         std::vector<std::size_t>& chosen, const BigInt& partial,
                         BigInt& total) {
  const std::size_t n = m.rows();
  if (row == n) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += chosen[i] > chosen[j] ? 1 : 0;
    }
    if (inversions % 2 == 0) {
      total += partial;
    } else {
      total -= partial;
    }
    return;
  }
  for (std::size_t col = 0; col < n; ++col) {
    if (used[col] || m(row, col) == 0) continue;
    used[col] = true;
    chosen[row] = col;
    leibniz_walk(m, row + 1, used, chosen, partial * m(row, col), total);
    used[col] = false;
  }
}

}  // namespace detail

// Signed sum over permutations. Independent of the elimination path in determinant().
inline BigInt determinant_oracle(const IntMatrix& m) {
  if (!m.is_square()) throw input_error("determinant_oracle needs a square matrix");
  if (m.rows() > kLeibnizSideLimit) {
    throw unsupported_size_error("determinant_oracle supports at most 9x9");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<bool> used(n, false);
  std::vector<std::size_t> chosen(n, 0);
  BigInt total = 0;
  detail::leibniz_walk(m, 0, used, chosen, BigInt(1), total);
  return total;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace ecclab
