#pragma once

#include <cstdint>
#include <vector>

#include "toeplab/toeplitz.hpp"

namespace toeplab {

/// SplitMix64: the fixed 64-bit generator behind every random draw in this
/// project. Pure integer state advance (s += 0x9E3779B97F4A7C15 followed by
/// two xor-multiply mixes), so streams are identical on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform draw from [0, bound) by rejection; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

private:
  std::uint64_t state_;
};

/// A permutation of {1, ..., n} in one-line notation.
class Permutation {
public:
  /// image[i-1] = sigma(i); must be a bijection of {1..n}.
  explicit Permutation(std::vector<int> image);

  std::size_t order() const { return image_.size(); }
  int operator()(std::size_t i) const { return image_[i - 1]; } // 1-based
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;

private:
  std::vector<int> image_;
};

/// Counts d_k = #{i : i - sigma(i) = k} for k = -(n-1)..(n-1).
class DisplacementHistogram {
public:
  DisplacementHistogram(std::size_t n, std::vector<std::int64_t> counts);

  std::size_t order() const { return n_; }
  std::int64_t count(long k) const;
  const std::vector<std::int64_t>& counts() const { return counts_; }

private:
  std::size_t n_;
  std::vector<std::int64_t> counts_; // index k + (n-1)
};

struct McEstimate {
  double mean = 0.0;
  double variance = 0.0; // unbiased sample variance
  double stderr_ = 0.0;  // sqrt(variance / trials)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct ConcentrationResult {
  double empirical_prob = 0.0;
  double chebyshev_bound = 0.0;
};

/// Fisher-Yates shuffle driven by SplitMix64(seed). Same (n, seed), same
/// permutation, always.
Permutation sample_uniform(std::size_t n, std::uint64_t seed);

/// delta_i = i - sigma(i), i = 1..n.
std::vector<int> displacements(const Permutation& p);

DisplacementHistogram histogram(const Permutation& p);

/// The Toeplitz symbol of P_n: a_k = d_k.
ToeplitzSymbol build_pn(const DisplacementHistogram& h);

/// Tr(P_n) = n * d_0, with d_0 the number of fixed points.
std::int64_t trace_pn(const Permutation& p);

/// E[d_k] = (n - |k|) / n for a uniform random permutation. |k| <= n-1.
double expected_dk(std::size_t n, long k);

/// Exact Var(d_k) = N(1/n - 1/n^2) + N(N-1)/(n^2 (n-1)), N = n - |k|:
/// indicator variances plus all pair covariances. Requires n >= 2.
double variance_dk_exact(std::size_t n, long k);

/// Leading term of the variance, N(1/n - 1/n^2): the indicator-variance sum
/// alone, off the exact value by the pair-covariance term <= 1/n.
double variance_dk_asymptotic(std::size_t n, long k);

/// Sample mean/variance of d_k over seeded trials. Worker w >= 1 runs its own
/// SplitMix64(seed + w) stream; partial sums are integers merged in worker
/// order, so results are bit-identical for fixed (n, k, trials, seed, workers).
McEstimate mc_moments_dk(std::size_t n, long k, std::uint64_t trials, std::uint64_t seed,
                         unsigned workers = 1);

/// Fraction of trials with |d_k/n - (n-|k|)/n^2| > epsilon (the deviation of
/// d_k/n from its own mean), next to the Chebyshev bound
/// Var(d_k) / (n^2 epsilon^2). Reported, not asserted.
ConcentrationResult concentration_check(std::size_t n, long k, double epsilon,
                                        std::uint64_t trials, std::uint64_t seed,
                                        unsigned workers = 1);

} // namespace toeplab
