#pragma once

// Theorem-check suites over seeded corpora, run on a small worker pool.
//
// A suite is a list of phases; each phase is a count of independent cases. Cases
// return nullopt on success or a Failure witness. Failures from all workers are sorted
// by their input encoding so the reported witness does not depend on scheduling.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "ecclab/catalog.hpp"
#include "ecclab/eccentric.hpp"
#include "ecclab/errors.hpp"
#include "ecclab/graph.hpp"
#include "ecclab/int_matrix.hpp"
#include "ecclab/invertibility.hpp"
#include "ecclab/io.hpp"
#include "ecclab/product.hpp"
#include "ecclab/tree.hpp"

namespace ecclab::checks {

struct Options {
  std::size_t trees_max_n = 8;
  std::optional<std::size_t> samples;  // suite default when unset
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
};

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string check_name;
  json corpus;
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  std::optional<Failure> first_failure;
  double wall_time_seconds = 0.0;

  bool passed() const { return fail_count == 0; }
};

inline json to_json(const Report& r) {
  json j;
  j["check_name"] = r.check_name;
  j["corpus"] = r.corpus;
  j["pass_count"] = r.pass_count;
  j["fail_count"] = r.fail_count;
  if (r.first_failure) {
    j["first_failure"] = {{"input", r.first_failure->input},
                          {"expected", r.first_failure->expected},
                          {"actual", r.first_failure->actual}};
  } else {
    j["first_failure"] = nullptr;
  }
  j["wall_time_seconds"] = r.wall_time_seconds;
  j["passed"] = r.passed();
  return j;
}

inline std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "check " << r.check_name << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
      << r.pass_count << " passed, " << r.fail_count << " failed, " << r.wall_time_seconds
      << " s)\n";
  out << "corpus: " << r.corpus.dump() << "\n";
  if (r.first_failure) {
    out << "first failure:\n  input:    " << r.first_failure->input
        << "\n  expected: " << r.first_failure->expected
        << "\n  actual:   " << r.first_failure->actual << "\n";
  }
  return out.str();
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent seed for case `index` of stream `stream`.
inline std::uint64_t case_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(base ^ splitmix64(stream)) + index);
}

using CaseFn = std::function<std::optional<Failure>(std::size_t)>;

struct Phase {
  std::string name;
  std::size_t count = 0;
  CaseFn run;
};

inline Report run_phases(std::string name, json corpus, const std::vector<Phase>& phases,
                         std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::size_t> offsets{0};
  for (const auto& p : phases) offsets.push_back(offsets.back() + p.count);
  const std::size_t total = offsets.back();

  std::atomic<std::size_t> next{0};
  std::mutex merge;
  std::vector<Failure> failures;
  auto worker = [&] {
    std::vector<Failure> local;
    for (std::size_t i = next++; i < total; i = next++) {
      const auto it = std::upper_bound(offsets.begin(), offsets.end(), i) - 1;
      const auto phase = static_cast<std::size_t>(it - offsets.begin());
      const std::size_t k = i - *it;
      try {
        if (auto f = phases[phase].run(k)) local.push_back(std::move(*f));
      } catch (const std::exception& e) {
        local.push_back({phases[phase].name + " case " + std::to_string(k), "no exception",
                         std::string("exception: ") + e.what()});
      }
    }
    std::lock_guard lock(merge);
    for (auto& f : local) failures.push_back(std::move(f));
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, total));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
    return std::tie(a.input, a.expected, a.actual) < std::tie(b.input, b.expected, b.actual);
  });
  Report r;
  r.check_name = std::move(name);
  r.corpus = std::move(corpus);
  r.fail_count = failures.size();
  r.pass_count = total - failures.size();
  if (!failures.empty()) r.first_failure = failures.front();
  r.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace detail {

inline std::string encode_tuple(std::span<const Graph> graphs) {
  std::string out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i > 0) out += " [] ";
    out += canonical_encoding(graphs[i]);
  }
  return out;
}

inline std::vector<Graph> graphs_of(std::span<const Tree> trees) {
  std::vector<Graph> out;
  for (const auto& t : trees) out.push_back(t.graph());
  return out;
}

inline std::string encode_tuple(std::span<const Tree> trees) {
  return encode_tuple(graphs_of(trees));
}

inline std::optional<Failure> expect(bool ok, std::string input, std::string expected,
                                     std::string actual) {
  if (ok) return std::nullopt;
  return Failure{std::move(input), std::move(expected), std::move(actual)};
}

inline std::string show(std::size_t x) { return std::to_string(x); }

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Every labeled tree on 2..max_n vertices, then `samples` random trees with
// sample_lo..sample_hi vertices.
class TreeCorpus {
 public:
  TreeCorpus(std::size_t max_n, std::size_t samples, std::uint64_t seed,
             std::size_t sample_lo = 9, std::size_t sample_hi = 40)
      : max_n_(max_n), samples_(samples), seed_(seed), lo_(sample_lo), hi_(sample_hi) {
    if (max_n > kMaxEnumeratedTreeSize) {
      throw unsupported_size_error("exhaustive trees are limited to n <= " +
                                   std::to_string(kMaxEnumeratedTreeSize));
    }
    offsets_.push_back(0);
    for (std::size_t n = 2; n <= max_n_; ++n) {
      offsets_.push_back(offsets_.back() + labeled_tree_count(n));
    }
  }

  std::size_t exhaustive_count() const { return offsets_.back(); }
  std::size_t size() const { return exhaustive_count() + samples_; }

  Tree at(std::size_t i) const {
    if (i < exhaustive_count()) {
      const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i) - 1;
      const std::size_t n = 2 + static_cast<std::size_t>(it - offsets_.begin());
      return tree_from_prufer_rank(n, i - *it);
    }
    const std::size_t k = i - exhaustive_count();
    const std::uint64_t s = case_seed(seed_, 1, k);
    const std::size_t n = lo_ + static_cast<std::size_t>(s % (hi_ - lo_ + 1));
    return random_tree(n, splitmix64(s));
  }

  json describe() const {
    return {{"exhaustive_n", {2, max_n_}},
            {"exhaustive_trees", exhaustive_count()},
            {"random_trees", samples_},
            {"random_n", {lo_, hi_}},
            {"seed", seed_}};
  }

 private:
  std::size_t max_n_;
  std::size_t samples_;
  std::uint64_t seed_;
  std::size_t lo_;
  std::size_t hi_;
  std::vector<std::size_t> offsets_;
};

// Random tree on 2..6 vertices, C_n or K_n with n <= 6.
inline Graph random_small_factor(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0: return random_tree(uniform(rng, 2, 6), rng()).graph();
    case 1: return cycle_graph(uniform(rng, 3, 6));
    default: return complete_graph(uniform(rng, 2, 6));
  }
}

inline std::vector<Graph> random_small_product(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t k = uniform(rng, 2, 3);
  std::vector<Graph> factors;
  for (std::size_t i = 0; i < k; ++i) factors.push_back(random_small_factor(rng));
  return factors;
}

// Tree tuples with k <= 3 and at most 1000 product vertices. A third of the tuples are
// one tree with P_2 factors, the shape that separates girth 6 from girth 4.
inline std::vector<Tree> random_tree_tuple(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t k = uniform(rng, 2, 3);
  std::vector<Tree> trees;
  if (uniform(rng, 0, 2) == 0) {
    trees.push_back(random_tree(uniform(rng, 2, 30), rng()));
    while (trees.size() < k) trees.emplace_back(path_graph(2));
    std::shuffle(trees.begin(), trees.end(), rng);
  } else {
    const std::size_t max_n = k == 2 ? 30 : 10;
    for (std::size_t i = 0; i < k; ++i) trees.push_back(random_tree(uniform(rng, 2, max_n), rng()));
  }
  return trees;
}

inline bool is_four_cycle(const Graph& g, const std::array<std::size_t, 4>& c) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (c[i] == c[j]) return false;
    }
    if (!g.adjacent(c[i], c[(i + 1) % 4])) return false;
  }
  return true;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t side, long long lo,
                               long long hi) {
  std::uniform_int_distribution<long long> entry(lo, hi);
  IntMatrix m(side, side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) m(i, j) = entry(rng);
  }
  return m;
}

inline std::string encode_matrix(const IntMatrix& m) { return matrix_to_json(m).dump(); }

}  // namespace detail

// ---- tree suites ----

inline Report tree_girth_suite(const Options& o) {
  const detail::TreeCorpus corpus(o.trees_max_n, o.samples.value_or(1000), o.seed);
  const std::vector<Phase> phases{{"trees", corpus.size(), [&](std::size_t i) {
    const Tree t = corpus.at(i);
    const DistanceData d = all_pairs_distances(t.graph());
    const std::size_t g = girth(eccentric_graph(d));
    const std::size_t want = predicted_tree_girth(d);
    const bool in_range = g == 0 || g == 3 || g == 4;
    if (g != want || !in_range) {
      return detail::expect(false, canonical_encoding(t.graph()), "girth " + detail::show(want),
                            "girth " + detail::show(g));
    }
    return detail::expect(check_unique_path_structure(t), canonical_encoding(t.graph()),
                          "E(T) a forest with every vertex adjacent to one path end",
                          "unique-path structure violated");
  }}};
  return run_phases("tree-girth", corpus.describe(), phases, o.jobs);
}

inline Report structure_suite(const Options& o) {
  const detail::TreeCorpus corpus(o.trees_max_n, o.samples.value_or(1000), o.seed);
  const std::vector<Phase> phases{{"trees", corpus.size(), [&](std::size_t i) {
    const Tree t = corpus.at(i);
    const std::string input = canonical_encoding(t.graph());
    const StructureCheck c = check_structure_theorem(t);
    if (!c.holds) {
      return detail::expect(false, input, "E(T) == union of E(T_i)",
                            "edge " + to_string(*c.mismatch) + " differs");
    }
    if (!c.covers_all_vertices || !c.subtrees_contain_paths) {
      return detail::expect(false, input, "induced subtrees cover T and contain their paths",
                            "coverage failed");
    }
    return detail::expect(diametrical_paths_intersect(diametrical_paths(t)), input,
                          "diametrical paths pairwise intersect", "disjoint pair found");
  }}};
  return run_phases("structure", corpus.describe(), phases, o.jobs);
}

inline Report monotone_suite(const Options& o) {
  const detail::TreeCorpus corpus(o.trees_max_n, o.samples.value_or(1000), o.seed);
  const std::vector<Phase> phases{{"trees", corpus.size(), [&](std::size_t i) {
    const Tree t = corpus.at(i);
    return detail::expect(check_monotone_exclusion(t), canonical_encoding(t.graph()),
                          "no E-path v1 v2 v3 with e(v1) < e(v2) < e(v3)",
                          "monotone E-path found");
  }}};
  return run_phases("monotone", corpus.describe(), phases, o.jobs);
}

// ---- product suites ----

inline Report additivity_suite(const Options& o) {
  const std::size_t samples = o.samples.value_or(200);
  const std::vector<Phase> phases{{"products", samples, [&](std::size_t i) {
    const auto factors = detail::random_small_product(case_seed(o.seed, 2, i));
    return detail::expect(check_additivity(factors), detail::encode_tuple(factors),
                          "distances and eccentricities add over coordinates",
                          "additivity violated");
  }}};
  return run_phases("additivity",
                    {{"products", samples}, {"factors", "2-3 of tree n<=6, C_n, K_n n<=6"},
                     {"seed", o.seed}},
                    phases, o.jobs);
}

inline Report componentwise_suite(const Options& o) {
  const std::size_t samples = o.samples.value_or(200);
  const std::vector<Phase> phases{
      {"products", samples,
       [&](std::size_t i) {
         const auto factors = detail::random_small_product(case_seed(o.seed, 2, i));
         return detail::expect(check_componentwise_eccentric(factors),
                               detail::encode_tuple(factors),
                               "eccentric in product iff eccentric in every factor",
                               "componentwise equivalence violated");
       }},
      {"p4-box-p4", 1, [](std::size_t) {
         return detail::expect(p4_box_p4_remark_holds(), "P_4 [] P_4",
                               "(0,1) and (2,3) not adjacent in E", "adjacent");
       }}};
  return run_phases("componentwise",
                    {{"products", samples}, {"factors", "2-3 of tree n<=6, C_n, K_n n<=6"},
                     {"seed", o.seed}},
                    phases, o.jobs);
}

inline Report product_girth_suite(const Options& o) {
  const std::size_t samples = o.samples.value_or(300);
  const std::size_t general = 100;

  auto tuple_case = [](const std::vector<Tree>& trees) -> std::optional<Failure> {
    const ProductGraph p = tree_product(trees, 1000);
    const std::size_t g = girth(eccentric_graph(p.graph));
    const std::size_t want = predicted_tree_product_girth(trees);
    return detail::expect(g == want, detail::encode_tuple(trees), "girth " + detail::show(want),
                          "girth " + detail::show(g));
  };

  struct Witness {
    std::string label;
    std::vector<Tree> trees;
    std::size_t girth;
  };
  const std::vector<Witness> witnesses{
      {"P_3 [] P_2", {Tree(path_graph(3)), Tree(path_graph(2))}, 6},
      {"S_3 [] P_2", {Tree(star_graph(3)), Tree(path_graph(2))}, 4},
      {"P_8 [] P_6", {Tree(path_graph(8)), Tree(path_graph(6))}, 0},
      {"P_5 [] S_3 [] P_3", {Tree(path_graph(5)), Tree(star_graph(3)), Tree(path_graph(3))}, 3},
  };

  const std::vector<Phase> phases{
      {"tree-tuples", samples,
       [&](std::size_t i) { return tuple_case(detail::random_tree_tuple(case_seed(o.seed, 3, i))); }},
      {"witnesses", witnesses.size(),
       [&](std::size_t i) -> std::optional<Failure> {
         const auto& w = witnesses[i];
         const Graph e = eccentric_graph(tree_product(w.trees, 1000).graph);
         const std::size_t g = girth(e);
         if (g != w.girth || predicted_tree_product_girth(w.trees) != w.girth) {
           return Failure{w.label, "girth " + detail::show(w.girth), "girth " + detail::show(g)};
         }
         if (w.girth == 0) {
           const std::size_t parts = component_count(e);
           return detail::expect(parts == 2, w.label, "2 components",
                                 detail::show(parts) + " components");
         }
         return std::nullopt;
       }},
      {"four-cycles", 2,
       [](std::size_t i) {
         // Peak and valley triples: E(P_4) is the path 2-0-3-1 and E(C_5) is a 5-cycle.
         std::vector<Graph> factors;
         FactorTriple peak;
         FactorTriple valley;
         if (i == 0) {
           factors = {path_graph(5), path_graph(4)};
           peak = {1, {2, 0, 3}};
           valley = {0, {0, 2, 4}};
         } else {
           factors = {cycle_graph(5), cycle_graph(5)};
           peak = {0, {0, 2, 4}};
           valley = {1, {0, 2, 4}};
         }
         const std::vector<Edge> fillers(factors.size());
         const auto c = four_cycle_witness(factors, peak, valley, fillers);
         const Graph e = eccentric_graph(cartesian_product(factors).graph);
         return detail::expect(detail::is_four_cycle(e, c), detail::encode_tuple(factors),
                               "witness is a 4-cycle in E", "not a 4-cycle");
       }},
      {"general", general,
       [&](std::size_t i) -> std::optional<Failure> {
         std::mt19937_64 rng(case_seed(o.seed, 4, i));
         const std::size_t k = detail::uniform(rng, 2, 3);
         std::vector<Graph> factors;
         for (std::size_t f = 0; f < k; ++f) {
           switch (detail::uniform(rng, 0, 2)) {
             case 0: factors.push_back(random_tree(detail::uniform(rng, 2, 8), rng()).graph()); break;
             case 1: factors.push_back(cycle_graph(detail::uniform(rng, 3, 7))); break;
             default: factors.push_back(complete_graph(detail::uniform(rng, 2, 5))); break;
           }
         }
         std::vector<std::size_t> girths;
         for (const auto& f : factors) girths.push_back(eccentric_girth(f));
         const std::size_t g = girth(eccentric_graph(cartesian_product(factors).graph));
         const bool all_three =
             std::all_of(girths.begin(), girths.end(), [](std::size_t x) { return x == 3; });
         const std::string input = detail::encode_tuple(factors);
         if ((g == 3) != all_three) {
           return Failure{input, all_three ? "girth 3" : "girth != 3", "girth " + detail::show(g)};
         }
         if (const auto want = predicted_product_girth_general(girths)) {
           return detail::expect(g == *want, input, "girth " + detail::show(*want),
                                 "girth " + detail::show(g));
         }
         return std::nullopt;
       }}};
  return run_phases("product-girth",
                    {{"tree_tuples", samples},
                     {"max_product_vertices", 1000},
                     {"general_products", general},
                     {"seed", o.seed}},
                    phases, o.jobs);
}

inline Report grid_suite(const Options& o) {
  const std::vector<Phase> phases{
      {"grids", 36,
       [](std::size_t i) -> std::optional<Failure> {
         const std::size_t m = 3 + i / 6;
         const std::size_t n = 3 + i % 6;
         const std::string input = "P_" + detail::show(m) + " [] P_" + detail::show(n);
         const Graph e = eccentric_graph(grid_graph(m, n));
         if (e != grid_eccentric_closed_form(m, n)) {
           return Failure{input, "quadrant closed form", canonical_encoding(e)};
         }
         const std::size_t g = girth(e);
         return detail::expect(g == grid_girth_rule(m, n), input,
                               "girth " + detail::show(grid_girth_rule(m, n)),
                               "girth " + detail::show(g));
       }},
      {"m-equals-2", 1, [](std::size_t) {
         const std::size_t g = eccentric_girth(grid_graph(3, 2));
         return detail::expect(g == 6, "P_3 [] P_2", "girth 6", "girth " + detail::show(g));
       }}};
  return run_phases("grid", {{"m", {3, 8}}, {"n", {3, 8}}, {"extra", "P_3 [] P_2"}}, phases,
                    o.jobs);
}

// The parity rule taken literally down to m, n = 2. Fails by design wherever one side is
// 2 and the other is odd: E(P_m [] P_2) then has girth 6 (a C_4-free E(P_m) with girth 3).
inline Report grid_parity_all_suite(const Options& o) {
  const std::vector<Phase> phases{{"grids", 49, [](std::size_t i) {
    const std::size_t m = 2 + i / 7;
    const std::size_t n = 2 + i % 7;
    const std::size_t g = eccentric_girth(grid_graph(m, n));
    return detail::expect(g == grid_girth_rule(m, n),
                          "P_" + detail::show(m) + " [] P_" + detail::show(n),
                          "girth " + detail::show(grid_girth_rule(m, n)),
                          "girth " + detail::show(g));
  }}};
  return run_phases("grid-parity-all", {{"m", {2, 8}}, {"n", {2, 8}}, {"expected", "fails"}},
                    phases, o.jobs);
}

inline Report cycle_product_suite(const Options& o) {
  const std::vector<Phase> phases{{"pairs", 64, [](std::size_t i) -> std::optional<Failure> {
    const std::size_t n = 3 + i / 8;
    const std::size_t m = 3 + i % 8;
    const std::string input = "C_" + detail::show(n) + " [] C_" + detail::show(m);
    const CycleProductReport r = cycle_product_structure(n, m);
    const Graph e = eccentric_graph(cartesian_product({cycle_graph(n), cycle_graph(m)}).graph);
    for (Vertex v = 0; v < e.num_vertices(); ++v) {
      if (e.degree(v) != r.regular_degree) {
        return Failure{input, detail::show(r.regular_degree) + "-regular",
                       "vertex " + detail::show(v) + " has degree " + detail::show(e.degree(v))};
      }
    }
    if (r.component_count) {
      const auto sizes = component_sizes(e);
      const bool ok = sizes.size() == *r.component_count &&
                      std::all_of(sizes.begin(), sizes.end(),
                                  [&](std::size_t s) { return s == *r.component_order; });
      if (!ok) {
        return Failure{input,
                       detail::show(*r.component_count) + " components of order " +
                           detail::show(*r.component_order),
                       detail::show(sizes.size()) + " components"};
      }
    }
    if (r.shape == CycleProductShape::kronecker_cycles &&
        e != kronecker_product_graph(eccentric_graph(cycle_graph(n)),
                                     eccentric_graph(cycle_graph(m)))) {
      return Failure{input, "E(C_n) x E(C_m)", canonical_encoding(e)};
    }
    const std::size_t g = girth(e);
    return detail::expect(g == r.predicted_girth, input,
                          "girth " + detail::show(r.predicted_girth), "girth " + detail::show(g));
  }}};
  return run_phases("cycle-product", {{"n", {3, 10}}, {"m", {3, 10}}}, phases, o.jobs);
}

inline Report cncn_iso_suite(const Options& o) {
  const std::vector<std::size_t> sizes{3, 5, 7, 9};
  const std::vector<Phase> phases{{"odd-n", sizes.size(), [&](std::size_t i) {
    const std::size_t n = sizes[i];
    const Graph c = cycle_graph(n);
    const auto f = cn_cn_isomorphism(n);
    const Graph image = apply_vertex_map(cartesian_product({c, c}).graph, f);
    return detail::expect(image == kronecker_product_graph(c, c), "n = " + detail::show(n),
                          "f maps C_n [] C_n onto C_n x C_n", "edge sets differ");
  }}};
  return run_phases("cncn-iso", {{"n", sizes}}, phases, o.jobs);
}

inline Report kronecker_corr_suite(const Options& o) {
  const std::size_t samples = o.samples.value_or(30);
  const std::vector<Phase> phases{{"pairs", samples, [&](std::size_t i) {
    std::mt19937_64 rng(case_seed(o.seed, 5, i));
    auto pick = [&]() -> Graph {
      switch (detail::uniform(rng, 0, 2)) {
        case 0: return cycle_graph(detail::uniform(rng, 3, 10));
        case 1: return complete_graph(detail::uniform(rng, 2, 6));
        default: return hypercube_graph(detail::uniform(rng, 1, 6));
      }
    };
    const Graph a = pick();
    const Graph b = pick();
    const std::vector<Graph> pair{a, b};
    return detail::expect(check_kronecker_correspondence(a, b), detail::encode_tuple(pair),
                          "E(a [] b) == E(a) x E(b)", "edge sets differ");
  }}};
  return run_phases("kronecker-corr",
                    {{"pairs", samples},
                     {"factors", "C_3..C_10, K_2..K_6, Q_1..Q_6"},
                     {"seed", o.seed}},
                    phases, o.jobs);
}

inline Report catalog_suite(const Options& o) {
  std::vector<FamilySpec> specs;
  for (std::size_t n = 2; n <= 30; ++n) specs.push_back({Family::path, {n}});
  for (std::size_t n = 3; n <= 30; ++n) specs.push_back({Family::cycle, {n}});
  for (std::size_t n = 2; n <= 10; ++n) specs.push_back({Family::complete, {n}});
  for (std::size_t s = 2; s <= 8; ++s) {
    for (std::size_t t = 2; t <= 8; ++t) specs.push_back({Family::complete_bipartite, {s, t}});
  }
  for (std::size_t n = 2; n <= 10; ++n) specs.push_back({Family::star, {n}});
  const std::vector<Phase> phases{{"families", specs.size(), [&](std::size_t i) {
    const auto& spec = specs[i];
    std::string input(family_name(spec.family));
    for (std::size_t p : spec.parameters) input += " " + detail::show(p);
    const Graph want = expected_eccentric(spec);
    const Graph got = eccentric_graph(build_family(spec));
    return detail::expect(got == want, input, canonical_encoding(want), canonical_encoding(got));
  }}};
  return run_phases("catalog",
                    {{"path", {2, 30}},
                     {"cycle", {3, 30}},
                     {"complete", {2, 10}},
                     {"complete_bipartite", {2, 8}},
                     {"star", {2, 10}}},
                    phases, o.jobs);
}

// ---- exact algebra ----

// Eccentricity matrices of side <= 9: all trees on 2..6 vertices, small family members
// and small products.
inline std::vector<std::pair<std::string, IntMatrix>> small_matrix_corpus() {
  std::vector<Graph> graphs;
  for (std::size_t n = 2; n <= 6; ++n) {
    auto it = enumerate_trees(n);
    while (auto t = it.next()) graphs.push_back(t->graph());
  }
  for (std::size_t n = 2; n <= 9; ++n) {
    graphs.push_back(path_graph(n));
    graphs.push_back(complete_graph(n));
    if (n >= 3) graphs.push_back(cycle_graph(n));
    graphs.push_back(star_graph(n - 1));
  }
  for (std::size_t s = 1; s <= 8; ++s) {
    for (std::size_t t = s; s + t <= 9; ++t) graphs.push_back(complete_bipartite_graph(s, t));
  }
  for (std::size_t s = 1; s <= 6; ++s) {
    for (std::size_t t = s; s + t <= 7; ++t) graphs.push_back(double_star_graph(s, t));
  }
  for (std::size_t t = 1; t <= 3; ++t) graphs.push_back(h_graph(t));
  for (std::size_t k = 1; k <= 3; ++k) graphs.push_back(hypercube_graph(k));
  graphs.push_back(grid_graph(2, 3));
  graphs.push_back(grid_graph(2, 4));
  graphs.push_back(grid_graph(3, 3));
  std::vector<std::pair<std::string, IntMatrix>> out;
  for (const auto& g : graphs) out.emplace_back(canonical_encoding(g), eccentricity_matrix(g));
  return out;
}

inline Report kronecker_det_suite(const Options& o) {
  const std::size_t samples = o.samples.value_or(500);
  const std::size_t pairs = 100;
  const auto corpus = small_matrix_corpus();
  const std::vector<Phase> phases{
      {"corpus", corpus.size(),
       [&](std::size_t i) {
         const auto& [input, m] = corpus[i];
         const BigInt a = determinant(m);
         const BigInt b = determinant_oracle(m);
         return detail::expect(a == b, input, "Leibniz " + b.str(), "Bareiss " + a.str());
       }},
      {"random", samples,
       [&](std::size_t i) {
         std::mt19937_64 rng(case_seed(o.seed, 6, i));
         const IntMatrix m = detail::random_matrix(rng, detail::uniform(rng, 1, 9), -9, 9);
         const BigInt a = determinant(m);
         const BigInt b = determinant_oracle(m);
         return detail::expect(a == b, detail::encode_matrix(m), "Leibniz " + b.str(),
                               "Bareiss " + a.str());
       }},
      {"kronecker", pairs,
       [&](std::size_t i) {
         std::mt19937_64 rng(case_seed(o.seed, 7, i));
         const std::size_t n = detail::uniform(rng, 1, 4);
         const std::size_t p = detail::uniform(rng, 1, 4);
         const IntMatrix a = detail::random_matrix(rng, n, -5, 5);
         const IntMatrix b = detail::random_matrix(rng, p, -5, 5);
         const BigInt got = determinant(kronecker_matrix(a, b));
         const BigInt want = boost::multiprecision::pow(determinant(a), static_cast<unsigned>(p)) *
                             boost::multiprecision::pow(determinant(b), static_cast<unsigned>(n));
         return detail::expect(got == want,
                               detail::encode_matrix(a) + " (x) " + detail::encode_matrix(b),
                               want.str(), got.str());
       }},
      {"fixed", 8,
       [](std::size_t i) -> std::optional<Failure> {
         if (i == 0) {
           const BigInt d = determinant(eccentricity_matrix(star_graph(3)));
           return detail::expect(d == -12, "S_3", "-12", d.str());
         }
         if (i == 1) {
           const BigInt d = determinant(eccentricity_matrix(path_graph(2)));
           return detail::expect(d == -1, "P_2", "-1", d.str());
         }
         const std::size_t k = i - 1;
         const IntMatrix e = eccentricity_matrix(hypercube_graph(k));
         const IntMatrix want = BigInt(k) * antidiagonal_j(std::size_t{1} << k);
         return detail::expect(e == want, "Q_" + detail::show(k), "k * J", "matrix differs");
       }}};
  return run_phases("kronecker-det",
                    {{"corpus_matrices", corpus.size()},
                     {"random_matrices", samples},
                     {"random_sides", {1, kLeibnizSideLimit}},
                     {"kronecker_pairs", pairs},
                     {"seed", o.seed}},
                    phases, o.jobs);
}

inline Report invertibility_suite(const Options& o) {
  const std::size_t exhaustive_max = std::min<std::size_t>(o.trees_max_n, 5);
  const detail::TreeCorpus corpus(exhaustive_max, o.samples.value_or(400), o.seed, 6, 7);
  const std::size_t max_copies = 2;

  struct Fixed {
    std::string label;
    std::vector<Tree> trees;
    bool invertible;
  };
  const std::vector<Fixed> fixed{
      {"P_3 [] P_3", {Tree(path_graph(3)), Tree(path_graph(3))}, false},
      {"P_5 [] P_2", {Tree(path_graph(5)), Tree(path_graph(2))}, false},
      {"S_3 [] P_3", {Tree(star_graph(3)), Tree(path_graph(3))}, false},
      {"S_3 [] P_2", {Tree(star_graph(3)), Tree(path_graph(2))}, true},
      {"P_4 [] P_2 [] P_2", {Tree(path_graph(4)), Tree(path_graph(2)), Tree(path_graph(2))}, true},
      {"P_2 [] P_2 [] P_2", {Tree(path_graph(2)), Tree(path_graph(2)), Tree(path_graph(2))}, true},
  };

  const std::vector<Phase> phases{
      {"tree-p2-powers", corpus.size() * (max_copies + 1),
       [&](std::size_t i) -> std::optional<Failure> {
         const Tree t = corpus.at(i / (max_copies + 1));
         const std::size_t copies = i % (max_copies + 1);
         std::vector<Tree> trees{t};
         for (std::size_t c = 0; c < copies; ++c) trees.emplace_back(path_graph(2));
         const std::string input = detail::encode_tuple(trees);
         const InvertibilityCheck c = check_invertibility_classification(trees);
         if (!c.agree) {
           return Failure{input, c.predicted ? "invertible" : "singular", "det " + c.det.str()};
         }
         if (c.predicted) return std::nullopt;
         const auto dep = lemma_dependency_witness(t, copies);
         if (!dep) return Failure{input, "row dependency witness", "none constructed"};
         const IntMatrix m = eccentricity_matrix(tree_box_p2_power(t, copies).graph);
         return detail::expect(verify_row_dependency(m, *dep), input, "row dependency holds",
                               "row dependency fails");
       }},
      {"fixed", fixed.size(),
       [&](std::size_t i) {
         const auto& f = fixed[i];
         const InvertibilityCheck c = check_invertibility_classification(f.trees);
         return detail::expect(c.agree && c.computed == f.invertible, f.label,
                               f.invertible ? "invertible" : "singular", "det " + c.det.str());
       }},
      {"star-probe", 12,
       [](std::size_t i) {
         const std::size_t leaves = 2 + i / 3;
         const std::size_t copies = i % 3;
         const StarProbe p = star_product_determinant_probe(leaves, copies);
         return detail::expect(p.matches_power_form,
                               "S_" + detail::show(leaves) + " [] P_2^" + detail::show(copies),
                               p.predicted_det.str() + " = " + p.factored_form, p.det.str());
       }}};
  json desc = corpus.describe();
  desc["p2_copies"] = {0, max_copies};
  desc["fixed_tuples"] = fixed.size();
  return run_phases("invertibility", desc, phases, o.jobs);
}

struct Suite {
  const char* name;
  Report (*run)(const Options&);
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"tree-girth", tree_girth_suite},
      {"structure", structure_suite},
      {"monotone", monotone_suite},
      {"additivity", additivity_suite},
      {"componentwise", componentwise_suite},
      {"product-girth", product_girth_suite},
      {"grid", grid_suite},
      {"cycle-product", cycle_product_suite},
      {"cncn-iso", cncn_iso_suite},
      {"kronecker-det", kronecker_det_suite},
      {"invertibility", invertibility_suite},
      {"kronecker-corr", kronecker_corr_suite},
      {"catalog", catalog_suite},
      {"grid-parity-all", grid_parity_all_suite},
  };
  return all;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.emplace_back(s.name);
  return out;
}

inline Report run_check(const std::string& suite, const Options& options) {
  for (const auto& s : suites()) {
    if (suite == s.name) return s.run(options);
  }
  throw input_error("unknown suite: " + suite);
}

}  // namespace ecclab::checks
