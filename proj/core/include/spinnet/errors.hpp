#pragma once

#include <stdexcept>
#include <string>

namespace spinnet {

/// Invalid caller-supplied input: out-of-range vertex, malformed edge list,
/// parameter outside its domain, register/dimension mismatch.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure: eigensolver did not converge, or a quantity that must
/// be physical (probability, trace) came out unusable.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinnet
