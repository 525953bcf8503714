#pragma once

#include <cstdint>
#include <vector>

#include "toeplab/toeplitz.hpp"

namespace toeplab {

/// T_n(x) = I + x N, with N the first-superdiagonal nilpotent.
struct UnipotentSpec {
  std::size_t n = 1;
  double x = 0.0;
};

/// Exact C(k, j) from a cached Pascal triangle; k <= 62 keeps every entry in
/// 64 bits, beyond that is a SizeGuardError.
std::int64_t binomial(unsigned k, unsigned j);

/// T_n(x)^k by the binomial expansion: entry (i, i+j) = C(k, j) x^j for
/// 0 <= j <= min(k, n-1). k <= 62.
DenseMatrix power_binomial(const UnipotentSpec& spec, unsigned k);

/// T_n(x)^k by square-and-multiply dense products (the oracle). k <= 2^20.
DenseMatrix power_direct(const UnipotentSpec& spec, unsigned long k);

/// n copies of 1 (T is unit upper-triangular); cross-checks
/// det(T - lambda I) = (1 - lambda)^n at lambda in {0, 2, -1} via LU before
/// returning.
std::vector<double> eigenvalues_unipotent(const UnipotentSpec& spec);

struct PathMonomial {
  std::int64_t coefficient = 0;
  long power = 0;
};

/// Entry (i, j) of T^k as a weighted path count: (C(k, j-i), j-i) when
/// 0 <= j-i <= min(k, n-1), else (0, 0). 1 <= i, j <= n.
PathMonomial path_count(std::size_t n, unsigned k, std::size_t i, std::size_t j);

} // namespace toeplab
