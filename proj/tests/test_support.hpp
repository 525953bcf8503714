#pragma once

#include <cstdint>
#include <vector>

#include "toeplab/permutations.hpp"
#include "toeplab/toeplitz.hpp"

namespace test_support {

/// Deterministic uniform double in [-1, 1].
inline double uniform_pm1(toeplab::SplitMix64& rng) {
  return static_cast<double>(rng.next() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

inline std::vector<double> random_vector(toeplab::SplitMix64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform_pm1(rng);
  return v;
}

/// Random symbol with coefficients in [-1, 1]; optionally mirrored so the
/// symbol is symmetric.
inline toeplab::ToeplitzSymbol random_symbol(toeplab::SplitMix64& rng, std::size_t n,
                                             bool symmetric) {
  std::vector<double> c(2 * n - 1);
  for (std::size_t m = 0; m < n; ++m) {
    const double v = uniform_pm1(rng);
    c[(n - 1) + m] = v;
    if (symmetric)
      c[(n - 1) - m] = v;
    else if (m > 0)
      c[(n - 1) - m] = uniform_pm1(rng);
  }
  return toeplab::ToeplitzSymbol(n, std::move(c));
}

inline toeplab::DenseMatrix random_symmetric_matrix(toeplab::SplitMix64& rng, std::size_t n) {
  toeplab::DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m.at(i, j) = m.at(j, i) = uniform_pm1(rng);
  return m;
}

} // namespace test_support
