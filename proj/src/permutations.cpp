#include "toeplab/permutations.hpp"

#include <cmath>
#include <numeric>
#include <thread>

namespace toeplab {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  // rejection sampling: exact uniformity, no modulo bias
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r < threshold);
  return r % bound;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const std::size_t n = image_.size();
  if (n == 0) throw DomainError("Permutation: order must be positive");
  std::vector<bool> seen(n, false);
  for (int v : image_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1])
      throw DomainError("Permutation: image is not a bijection of {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[image_[i] - 1] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

DisplacementHistogram::DisplacementHistogram(std::size_t n, std::vector<std::int64_t> counts)
    : n_(n), counts_(std::move(counts)) {
  if (n_ == 0) throw DomainError("DisplacementHistogram: order must be positive");
  if (counts_.size() != 2 * n_ - 1)
    throw DimensionError("DisplacementHistogram: count vector must have length 2n-1");
  std::int64_t total = 0;
  const long bound = static_cast<long>(n_) - 1;
  for (long k = -bound; k <= bound; ++k) {
    const std::int64_t d = counts_[static_cast<std::size_t>(k + bound)];
    if (d < 0 || d > static_cast<std::int64_t>(n_) - std::labs(k))
      throw DomainError("DisplacementHistogram: count outside [0, n-|k|]");
    total += d;
  }
  if (total != static_cast<std::int64_t>(n_))
    throw DomainError("DisplacementHistogram: counts must sum to n");
}

std::int64_t DisplacementHistogram::count(long k) const {
  const long bound = static_cast<long>(n_) - 1;
  if (k < -bound || k > bound) throw DomainError("DisplacementHistogram::count: |k| exceeds n-1");
  return counts_[static_cast<std::size_t>(k + bound)];
}

namespace {

void shuffle_identity(std::vector<int>& image, SplitMix64& rng) {
  std::iota(image.begin(), image.end(), 1);
  for (std::size_t i = image.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
    std::swap(image[i], image[j]);
  }
}

// d_k of a freshly shuffled image without building the histogram
std::int64_t count_displacement(const std::vector<int>& image, long k) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (static_cast<long>(i + 1) - image[i] == k) ++d;
  return d;
}

void check_dk_domain(std::size_t n, long k) {
  if (std::labs(k) > static_cast<long>(n) - 1)
    throw DomainError("displacement diagonal |k| exceeds n-1");
}

struct McSums {
  std::int64_t s1 = 0; // sum of d_k
  std::int64_t s2 = 0; // sum of d_k^2
  std::int64_t exceed = 0; // trials with |d_k/n - mean| > epsilon
};

// One worker's share of the Monte Carlo stream: its own generator seeded
// seed + index, integer partial sums (exact, so merge order is moot for the
// value but is fixed anyway).
McSums run_worker(std::size_t n, long k, std::uint64_t trials, std::uint64_t seed,
                  double epsilon, double mean) {
  SplitMix64 rng(seed);
  std::vector<int> image(n);
  McSums sums;
  const double dn = static_cast<double>(n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    shuffle_identity(image, rng);
    const std::int64_t d = count_displacement(image, k);
    sums.s1 += d;
    sums.s2 += d * d;
    if (epsilon > 0.0 && std::fabs(static_cast<double>(d) / dn - mean) > epsilon) ++sums.exceed;
  }
  return sums;
}

McSums fan_out(std::size_t n, long k, std::uint64_t trials, std::uint64_t seed, unsigned workers,
               double epsilon, double mean) {
  if (workers == 0) throw DomainError("workers must be positive");
  if (workers == 1) return run_worker(n, k, trials, seed + 0, epsilon, mean);
  std::vector<McSums> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t share = trials / workers + (w < trials % workers ? 1 : 0);
    pool.emplace_back([&partial, w, n, k, share, seed, epsilon, mean] {
      partial[w] = run_worker(n, k, share, seed + w, epsilon, mean);
    });
  }
  for (auto& th : pool) th.join();
  McSums total;
  for (const McSums& p : partial) { // merged in worker order
    total.s1 += p.s1;
    total.s2 += p.s2;
    total.exceed += p.exceed;
  }
  return total;
}

} // namespace

Permutation sample_uniform(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample_uniform: n must be positive");
  SplitMix64 rng(seed);
  std::vector<int> image(n);
  shuffle_identity(image, rng);
  return Permutation(std::move(image));
}

std::vector<int> displacements(const Permutation& p) {
  const std::size_t n = p.order();
  std::vector<int> delta(n);
  for (std::size_t i = 1; i <= n; ++i) delta[i - 1] = static_cast<int>(i) - p(i);
  return delta;
}

DisplacementHistogram histogram(const Permutation& p) {
  const std::size_t n = p.order();
  std::vector<std::int64_t> counts(2 * n - 1, 0);
  for (int d : displacements(p)) ++counts[static_cast<std::size_t>(d + static_cast<long>(n) - 1)];
  return DisplacementHistogram(n, std::move(counts));
}

ToeplitzSymbol build_pn(const DisplacementHistogram& h) {
  std::vector<double> coeffs(h.counts().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = static_cast<double>(h.counts()[i]);
  return ToeplitzSymbol(h.order(), std::move(coeffs));
}

std::int64_t trace_pn(const Permutation& p) {
  std::int64_t fixed = 0;
  for (std::size_t i = 1; i <= p.order(); ++i)
    if (p(i) == static_cast<int>(i)) ++fixed;
  return static_cast<std::int64_t>(p.order()) * fixed;
}

double expected_dk(std::size_t n, long k) {
  check_dk_domain(n, k);
  return static_cast<double>(static_cast<long>(n) - std::labs(k)) / static_cast<double>(n);
}

double variance_dk_exact(std::size_t n, long k) {
  check_dk_domain(n, k);
  if (n < 2) throw DomainError("variance_dk_exact: n must be at least 2");
  const double dn = static_cast<double>(n);
  const double N = static_cast<double>(static_cast<long>(n) - std::labs(k));
  return N * (1.0 / dn - 1.0 / (dn * dn)) + N * (N - 1.0) / (dn * dn * (dn - 1.0));
}

double variance_dk_asymptotic(std::size_t n, long k) {
  check_dk_domain(n, k);
  const double dn = static_cast<double>(n);
  const double N = static_cast<double>(static_cast<long>(n) - std::labs(k));
  return N * (1.0 / dn - 1.0 / (dn * dn));
}

McEstimate mc_moments_dk(std::size_t n, long k, std::uint64_t trials, std::uint64_t seed,
                         unsigned workers) {
  check_dk_domain(n, k);
  if (trials < 2) throw DomainError("mc_moments_dk: needs at least 2 trials");
  const McSums sums = fan_out(n, k, trials, seed, workers, 0.0, 0.0);
  McEstimate est;
  est.trials = trials;
  est.seed = seed;
  const double t = static_cast<double>(trials);
  est.mean = static_cast<double>(sums.s1) / t;
  // unbiased: (T*S2 - S1^2) / (T*(T-1)), numerator exact in 64 bits
  const std::int64_t numerator =
      static_cast<std::int64_t>(trials) * sums.s2 - sums.s1 * sums.s1;
  est.variance = static_cast<double>(numerator) / (t * (t - 1.0));
  est.stderr_ = std::sqrt(est.variance / t);
  return est;
}

ConcentrationResult concentration_check(std::size_t n, long k, double epsilon,
                                        std::uint64_t trials, std::uint64_t seed,
                                        unsigned workers) {
  check_dk_domain(n, k);
  if (epsilon <= 0.0) throw DomainError("concentration_check: epsilon must be positive");
  if (trials == 0) throw DomainError("concentration_check: needs at least one trial");
  // d_k/n is centered at its own mean (n-|k|)/n^2, the scale on which the
  // Chebyshev bound Var(d_k)/(n^2 eps^2) is valid
  const double mean = expected_dk(n, k) / static_cast<double>(n);
  const McSums sums = fan_out(n, k, trials, seed, workers, epsilon, mean);
  ConcentrationResult result;
  result.empirical_prob = static_cast<double>(sums.exceed) / static_cast<double>(trials);
  const double dn = static_cast<double>(n);
  result.chebyshev_bound = variance_dk_exact(n, k) / (dn * dn * epsilon * epsilon);
  return result;
}

} // namespace toeplab
