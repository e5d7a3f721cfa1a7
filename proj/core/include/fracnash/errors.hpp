#pragma once

#include <stdexcept>
#include <string>

namespace fracnash {

/// Raised when a linear-algebra step fails in a way that indicates a broken
/// discretization (loss of positive definiteness, singular operator, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when inputs violate a documented contract (shape mismatch,
/// out-of-range order, malformed subdomain, unknown preset, bad config).
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fracnash
