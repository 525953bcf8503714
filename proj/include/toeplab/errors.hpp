#pragma once

#include <stdexcept>
#include <string>

namespace toeplab {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Vector/matrix extents do not line up.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Request exceeds a hard size guard (exact-arithmetic overflow, enumeration blowup).
class SizeGuardError : public std::length_error {
public:
  explicit SizeGuardError(const std::string& what) : std::length_error(what) {}
};

/// Iterative solver ran out of its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace toeplab
