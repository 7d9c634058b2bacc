#pragma once

#include <stdexcept>
#include <string>

namespace ecclab {

// Malformed caller input: bad endpoints, self-loops, non-bijective maps, bad family parameters.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well-formed but outside the mathematical domain (e.g. a disconnected graph
// where distances are required).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Hypotheses of a construction are not met.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The request exceeds a documented size limit of an exhaustive routine.
class unsupported_size_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The request exceeds a configurable resource cap (product sizes, matrix sides).
class resource_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ecclab
