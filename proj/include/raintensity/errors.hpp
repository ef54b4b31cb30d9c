#pragma once

#include <stdexcept>
#include <string>

namespace raintensity {

/// Invalid parameters, arguments outside a function's domain, or malformed input.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure failed to converge or detected divergence/overflow.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace raintensity
