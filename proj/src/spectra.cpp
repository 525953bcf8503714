#include "toeplab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace toeplab {

namespace {

double offdiag_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.n_rows; ++i)
    for (std::size_t j = 0; j < a.n_cols; ++j)
      if (i != j) s += a.at(i, j) * a.at(i, j);
  return std::sqrt(s);
}

} // namespace

Spectrum jacobi_eigen(const DenseMatrix& m, const JacobiOptions& opts) {
  if (!m.square()) throw DomainError("jacobi_eigen: matrix not square");
  const std::size_t n = m.n_rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::fabs(m.at(i, j) - m.at(j, i)) > 1e-12)
        throw DomainError("jacobi_eigen: matrix not symmetric within 1e-12");
  if (opts.tolerance <= 0.0 || opts.max_sweeps < 1)
    throw DomainError("jacobi_eigen: bad options");

  DenseMatrix a = m;
  const double frob = frobenius_norm(m);
  const double target = opts.tolerance * frob;
  double off = offdiag_norm(a);
  int sweeps = 0;
  while (off > target && sweeps < opts.max_sweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (apq == 0.0) continue;
        const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a.at(p, p) -= t * apq;
        a.at(q, q) += t * apq;
        a.at(p, q) = a.at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a.at(r, p);
          const double arq = a.at(r, q);
          a.at(r, p) = a.at(p, r) = c * arp - s * arq;
          a.at(r, q) = a.at(q, r) = s * arp + c * arq;
        }
      }
    }
    ++sweeps;
    off = offdiag_norm(a);
  }
  if (off > target)
    throw ConvergenceError("jacobi_eigen: sweep budget exhausted before convergence");

  Spectrum spectrum;
  spectrum.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) spectrum.eigenvalues[i] = a.at(i, i);
  std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(), std::greater<>());
  spectrum.sweeps = sweeps;
  spectrum.off_norm = off;
  return spectrum;
}

double cosine_symbol_sum(std::size_t n, std::size_t k) {
  if (n == 0) throw DomainError("cosine_symbol_sum: n must be positive");
  // Accumulate sum_m (n - |m|) cos(pi k m / n) and divide by n once, pairing
  // +-m so the k = 0 case sums exact integers (result exactly n).
  const double dn = static_cast<double>(n);
  double acc = dn; // m = 0
  for (std::size_t m = 1; m < n; ++m)
    acc += 2.0 * static_cast<double>(n - m) *
           std::cos(std::numbers::pi * static_cast<double>(k) * static_cast<double>(m) / dn);
  return acc / dn;
}

double rayleigh(const ToeplitzSymbol& s, std::span<const double> v) {
  if (v.size() != s.order()) throw DimensionError("rayleigh: vector length != n");
  double vv = 0.0;
  for (double x : v) vv += x * x;
  if (vv == 0.0) throw DomainError("rayleigh: zero vector");
  const std::vector<double> sv = matvec_naive(s, v);
  double vsv = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) vsv += v[i] * sv[i];
  return vsv / vv;
}

double trace_powers(const DenseMatrix& m, unsigned p, const JacobiOptions& opts) {
  if (p == 0) throw DomainError("trace_powers: p must be positive");
  const Spectrum spectrum = jacobi_eigen(m, opts);
  double sum = 0.0;
  for (double lambda : spectrum.eigenvalues) {
    double term = lambda;
    for (unsigned i = 1; i < p; ++i) term *= lambda;
    sum += term;
  }
  return sum / static_cast<double>(m.n_rows);
}

double claimed_lambda(std::size_t k) {
  const double odd = 2.0 * static_cast<double>(k) + 1.0;
  return 4.0 / (std::numbers::pi * std::numbers::pi * odd * odd);
}

double claimed_trace_series(unsigned p, std::size_t terms) {
  if (p == 0) throw DomainError("claimed_trace_series: p must be positive");
  if (terms == 0) throw DomainError("claimed_trace_series: needs at least one term");
  double sum = 0.0;
  for (std::size_t k = terms; k-- > 0;) { // smallest terms first
    const double lambda = claimed_lambda(k);
    double term = lambda;
    for (unsigned i = 1; i < p; ++i) term *= lambda;
    sum += term;
  }
  return sum;
}

double claimed_trace_series_tail(unsigned p, std::size_t terms) {
  if (p == 0 || terms == 0) throw DomainError("claimed_trace_series_tail: bad arguments");
  const double head = std::pow(4.0 / (std::numbers::pi * std::numbers::pi), p);
  return head * std::pow(2.0 * static_cast<double>(terms), 1.0 - 2.0 * static_cast<double>(p)) /
         (2.0 * static_cast<double>(p) - 1.0);
}

} // namespace toeplab
