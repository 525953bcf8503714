#include "toeplab/nilpotent.hpp"

#include <array>
#include <cmath>

namespace toeplab {

namespace {

constexpr unsigned kBinomialGuard = 62; // C(62, j) all fit in int64

const std::vector<std::vector<std::int64_t>>& pascal_triangle() {
  static const std::vector<std::vector<std::int64_t>> rows = [] {
    std::vector<std::vector<std::int64_t>> t(kBinomialGuard + 1);
    for (unsigned k = 0; k <= kBinomialGuard; ++k) {
      t[k].resize(k + 1);
      t[k][0] = t[k][k] = 1;
      for (unsigned j = 1; j < k; ++j) t[k][j] = t[k - 1][j - 1] + t[k - 1][j];
    }
    return t;
  }();
  return rows;
}

DenseMatrix materialize_unipotent(const UnipotentSpec& spec) {
  DenseMatrix t = DenseMatrix::identity(spec.n);
  for (std::size_t i = 0; i + 1 < spec.n; ++i) t.at(i, i + 1) = spec.x;
  return t;
}

} // namespace

std::int64_t binomial(unsigned k, unsigned j) {
  if (k > kBinomialGuard)
    throw SizeGuardError("binomial: k > 62 can overflow 64-bit coefficients");
  if (j > k) return 0;
  return pascal_triangle()[k][j];
}

DenseMatrix power_binomial(const UnipotentSpec& spec, unsigned k) {
  if (spec.n == 0) throw DomainError("power_binomial: order must be positive");
  if (k > kBinomialGuard)
    throw SizeGuardError("power_binomial: exponent guarded at k <= 62");
  DenseMatrix out(spec.n, spec.n);
  const std::size_t band = std::min<std::size_t>(k, spec.n - 1);
  for (std::size_t j = 0; j <= band; ++j) {
    const double entry = static_cast<double>(binomial(k, static_cast<unsigned>(j))) *
                         std::pow(spec.x, static_cast<double>(j));
    for (std::size_t i = 0; i + j < spec.n; ++i) out.at(i, i + j) = entry;
  }
  return out;
}

DenseMatrix power_direct(const UnipotentSpec& spec, unsigned long k) {
  if (spec.n == 0) throw DomainError("power_direct: order must be positive");
  if (k > (1UL << 20)) throw SizeGuardError("power_direct: exponent guarded at 2^20");
  DenseMatrix result = DenseMatrix::identity(spec.n);
  DenseMatrix base = materialize_unipotent(spec);
  while (k > 0) {
    if (k & 1UL) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

std::vector<double> eigenvalues_unipotent(const UnipotentSpec& spec) {
  if (spec.n == 0) throw DomainError("eigenvalues_unipotent: order must be positive");
  // Unit upper-triangular, so the spectrum is n ones; cross-check the
  // characteristic polynomial at three sample points before returning.
  for (double lambda : {0.0, 2.0, -1.0}) {
    DenseMatrix shifted = materialize_unipotent(spec);
    for (std::size_t i = 0; i < spec.n; ++i) shifted.at(i, i) -= lambda;
    const double det = lu_determinant(shifted);
    const double expected = std::pow(1.0 - lambda, static_cast<double>(spec.n));
    if (std::fabs(det - expected) > 1e-9 * std::fabs(expected))
      throw ConvergenceError("eigenvalues_unipotent: determinant cross-check failed");
  }
  return std::vector<double>(spec.n, 1.0);
}

PathMonomial path_count(std::size_t n, unsigned k, std::size_t i, std::size_t j) {
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("path_count: indices must be in 1..n");
  PathMonomial p;
  if (j < i) return p;
  const std::size_t steps = j - i;
  if (steps > std::min<std::size_t>(k, n - 1)) return p;
  p.coefficient = binomial(k, static_cast<unsigned>(steps));
  p.power = static_cast<long>(steps);
  return p;
}

} // namespace toeplab
