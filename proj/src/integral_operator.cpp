#include "toeplab/integral_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace toeplab {

namespace {

constexpr std::size_t kSeriesTerms = 1'000'000;

void check_unit_interval(double x, double y) {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
    throw DomainError("kernel_eval: arguments must lie in [0,1]");
}

// Trig moments over [a,b]: integral of cos/sin(w y) and of y*cos/sin(w y).
struct TrigMoments {
  double i0 = 0.0; // integral of trig(w y)
  double i1 = 0.0; // integral of y trig(w y)
};

TrigMoments cos_moments(double a, double b, double w) {
  TrigMoments m;
  m.i0 = (std::sin(w * b) - std::sin(w * a)) / w;
  m.i1 = (std::cos(w * b) / (w * w) + b * std::sin(w * b) / w) -
         (std::cos(w * a) / (w * w) + a * std::sin(w * a) / w);
  return m;
}

TrigMoments sin_moments(double a, double b, double w) {
  TrigMoments m;
  m.i0 = (std::cos(w * a) - std::cos(w * b)) / w;
  m.i1 = (std::sin(w * b) / (w * w) - b * std::cos(w * b) / w) -
         (std::sin(w * a) / (w * w) - a * std::cos(w * a) / w);
  return m;
}

// K(x, .) is linear on [0,x] and on [x,1]: alpha + beta*y on each side.
struct PiecewiseLinear {
  double alpha_left, beta_left;
  double alpha_right, beta_right;
};

PiecewiseLinear kernel_pieces(KernelId id, double x) {
  switch (id) {
    case KernelId::Triangular: return {1.0 - x, 1.0, 1.0 + x, -1.0};
    case KernelId::BrownianMin:
    case KernelId::ConvIndicator: return {0.0, 1.0, x, 0.0};
  }
  throw DomainError("kernel_pieces: unknown kernel");
}

// Exact integral over [0,1] of K(x,y) phi(y) dy, split at y = x.
double apply_operator_exact(KernelId id, const EigenpairClaim& claim, double x) {
  if (claim.profile == EigenpairClaim::Profile::Zero) return 0.0;
  const PiecewiseLinear pieces = kernel_pieces(id, x);
  const TrigMoments left = claim.profile == EigenpairClaim::Profile::Cosine
                               ? cos_moments(0.0, x, claim.omega)
                               : sin_moments(0.0, x, claim.omega);
  const TrigMoments right = claim.profile == EigenpairClaim::Profile::Cosine
                                ? cos_moments(x, 1.0, claim.omega)
                                : sin_moments(x, 1.0, claim.omega);
  return pieces.alpha_left * left.i0 + pieces.beta_left * left.i1 +
         pieces.alpha_right * right.i0 + pieces.beta_right * right.i1;
}

ReportEntry compare(std::string quantity, double paper, double computed, double tol) {
  ReportEntry e;
  e.quantity = std::move(quantity);
  e.paper_value = paper;
  e.computed_value = computed;
  e.abs_diff = std::fabs(computed - paper);
  if (paper != 0.0) {
    e.rel_diff = e.abs_diff / std::fabs(paper);
  } else {
    e.has_rel_diff = false;
  }
  e.tolerance = tol;
  e.verdict = e.abs_diff <= tol ? ReportEntry::Verdict::Match : ReportEntry::Verdict::Mismatch;
  return e;
}

// Closed form of the one-sided limit integral over [0,1] of (1-x) cos(pi k x):
// 1/2 at k = 0, (1 - (-1)^k) / (pi k)^2 otherwise.
double one_sided_cosine_integral(std::size_t k) {
  if (k == 0) return 0.5;
  if (k % 2 == 0) return 0.0;
  const double pk = std::numbers::pi * static_cast<double>(k);
  return 2.0 / (pk * pk);
}

} // namespace

EigenpairClaim EigenpairClaim::cosine_claim(std::size_t k) {
  EigenpairClaim c;
  c.k = k;
  c.omega = (2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi / 2.0;
  c.lambda = claimed_lambda(k);
  c.profile = Profile::Cosine;
  return c;
}

EigenpairClaim EigenpairClaim::sine_claim(std::size_t k) {
  EigenpairClaim c = cosine_claim(k);
  c.profile = Profile::Sine;
  return c;
}

EigenpairClaim EigenpairClaim::zero_profile() {
  EigenpairClaim c;
  c.profile = Profile::Zero;
  return c;
}

double EigenpairClaim::phi(double x) const {
  switch (profile) {
    case Profile::Cosine: return std::cos(omega * x);
    case Profile::Sine: return std::sin(omega * x);
    case Profile::Zero: return 0.0;
  }
  return 0.0;
}

double kernel_eval(KernelId id, double x, double y) {
  check_unit_interval(x, y);
  switch (id) {
    case KernelId::Triangular: return 1.0 - std::fabs(x - y);
    case KernelId::BrownianMin: return std::min(x, y);
    case KernelId::ConvIndicator: {
      // overlap of [x-1, x], [y-1, y] and [0, 1], clipped below at 0
      const double lo = std::max(0.0, std::max(x, y) - 1.0);
      const double hi = std::min(1.0, std::min(x, y));
      return std::max(0.0, hi - lo);
    }
  }
  throw DomainError("kernel_eval: unknown kernel");
}

DenseMatrix nystrom(KernelId id, std::size_t m) {
  if (m < 2) throw DomainError("nystrom: mesh must have at least 2 nodes");
  DenseMatrix a(m, m);
  const double dm = static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double xi = (static_cast<double>(i) + 0.5) / dm;
    for (std::size_t j = 0; j <= i; ++j) {
      const double xj = (static_cast<double>(j) + 0.5) / dm;
      const double v = kernel_eval(id, xi, xj) / dm;
      a.at(i, j) = a.at(j, i) = v;
    }
  }
  return a;
}

std::vector<double> nystrom_spectrum(KernelId id, std::size_t m, std::size_t top) {
  if (top > m) throw DomainError("nystrom_spectrum: top exceeds mesh size");
  const Spectrum s = jacobi_eigen(nystrom(id, m));
  return {s.eigenvalues.begin(), s.eigenvalues.begin() + static_cast<long>(top)};
}

double eigenfunction_residual(KernelId id, const EigenpairClaim& claim,
                              std::size_t quad_points) {
  if (quad_points < 64) throw DomainError("eigenfunction_residual: needs >= 64 nodes");
  const double dq = static_cast<double>(quad_points);
  double sum_sq = 0.0;
  for (std::size_t q = 0; q < quad_points; ++q) {
    const double x = (static_cast<double>(q) + 0.5) / dq;
    const double r = apply_operator_exact(id, claim, x) - claim.lambda * claim.phi(x);
    sum_sq += r * r;
  }
  return std::sqrt(sum_sq / dq);
}

double lemma_integral(std::size_t k, std::size_t quad_points) {
  if (quad_points < 64) throw DomainError("lemma_integral: needs >= 64 nodes");
  const double w = (2.0 * static_cast<double>(k) + 1.0) * std::numbers::pi / 2.0;
  const double dq = static_cast<double>(quad_points);
  double acc = 0.0;
  for (std::size_t q = 0; q < quad_points; ++q) {
    const double t = (static_cast<double>(q) + 0.5) / dq;
    acc += (1.0 - t) * std::cos(w * t);
  }
  return acc / dq;
}

double operator_trace(KernelId id, std::size_t quad_points) {
  if (quad_points < 2) throw DomainError("operator_trace: needs >= 2 nodes");
  const double dq = static_cast<double>(quad_points);
  double acc = 0.0;
  for (std::size_t q = 0; q < quad_points; ++q) {
    const double x = (static_cast<double>(q) + 0.5) / dq;
    acc += kernel_eval(id, x, x);
  }
  return acc / dq;
}

std::vector<CorollaryRow> corollary_convergence(std::size_t k,
                                                const std::vector<std::size_t>& n_list) {
  std::vector<CorollaryRow> rows;
  rows.reserve(n_list.size());
  for (std::size_t n : n_list) {
    if (n < k + 2) throw DomainError("corollary_convergence: needs n >= k+2");
    const Spectrum s = jacobi_eigen(materialize(triangular_symbol(n)));
    CorollaryRow row;
    row.n = n;
    row.lambda_k_n_over_n = s.eigenvalues[k] / static_cast<double>(n);
    row.paper_target = claimed_lambda(k);
    rows.push_back(row);
  }
  return rows;
}

DiscrepancyReport build_discrepancy_report(const ReportConfig& cfg) {
  if (cfg.m < cfg.k_max + 1 || cfg.m < 2) throw DomainError("report: mesh too small for k_max");
  if (cfg.quad_points < 64) throw DomainError("report: quad_points must be >= 64");
  if (cfg.n_list.empty()) throw DomainError("report: n_list must not be empty");
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    if (cfg.n_list[i] < cfg.k_max + 2) throw DomainError("report: every n must be >= k_max+2");
    if (i > 0 && cfg.n_list[i] <= cfg.n_list[i - 1])
      throw DomainError("report: n_list must be strictly increasing");
  }
  if (cfg.p_max < 1) throw DomainError("report: p_max must be positive");
  if (cfg.tol_spectral <= 0.0 || cfg.tol_identity <= 0.0)
    throw DomainError("report: tolerances must be positive");

  DiscrepancyReport report;
  auto& e = report.entries;

  // (a) pointwise identity claimed by the convolution representation
  {
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i)
      for (int j = 0; j <= 100; ++j) {
        const double x = i / 100.0, y = j / 100.0;
        worst = std::max(worst, std::fabs(kernel_eval(KernelId::ConvIndicator, x, y) -
                                          kernel_eval(KernelId::Triangular, x, y)));
      }
    e.push_back(compare("lemma_pointwise_max_diff", 0.0, worst, cfg.tol_identity));
  }

  // (b) the displayed integral identity, the one part of the spectrum claim
  // that verifies cleanly
  for (std::size_t k = 0; k <= cfg.k_max; ++k)
    e.push_back(compare("lemma_integral_k" + std::to_string(k), claimed_lambda(k),
                        lemma_integral(k, cfg.quad_points), cfg.tol_identity));

  // (c) eigenpair residuals: the claims on the triangular kernel, then the
  // positive controls on min(x,y)
  for (std::size_t k = 0; k <= cfg.k_max; ++k)
    e.push_back(compare(
        "residual_triangular_cosine_k" + std::to_string(k), 0.0,
        eigenfunction_residual(KernelId::Triangular, EigenpairClaim::cosine_claim(k),
                               cfg.quad_points),
        cfg.tol_identity));
  for (std::size_t k = 0; k <= cfg.k_max; ++k)
    e.push_back(compare(
        "residual_min_sine_k" + std::to_string(k), 0.0,
        eigenfunction_residual(KernelId::BrownianMin, EigenpairClaim::sine_claim(k),
                               cfg.quad_points),
        cfg.tol_identity));

  // (d) trace vs the claimed eigenvalue sum
  e.push_back(compare("operator_trace_triangular_vs_claimed_sum",
                      claimed_trace_series(1, kSeriesTerms),
                      operator_trace(KernelId::Triangular, cfg.quad_points), cfg.tol_identity));

  // (e) Nystrom spectra vs the claimed values and against each other
  const std::vector<double> tri_mu = nystrom_spectrum(KernelId::Triangular, cfg.m, cfg.k_max + 1);
  const std::vector<double> min_mu = nystrom_spectrum(KernelId::BrownianMin, cfg.m, cfg.k_max + 1);
  for (std::size_t k = 0; k <= cfg.k_max; ++k)
    e.push_back(compare("nystrom_triangular_eig" + std::to_string(k) + "_vs_claimed",
                        claimed_lambda(k), tri_mu[k], cfg.tol_spectral));
  for (std::size_t k = 0; k <= cfg.k_max; ++k)
    e.push_back(compare("nystrom_min_eig" + std::to_string(k) + "_vs_claimed", claimed_lambda(k),
                        min_mu[k], cfg.tol_spectral));
  for (std::size_t k = 0; k <= cfg.k_max; ++k)
    e.push_back(compare("nystrom_eig" + std::to_string(k) + "_triangular_minus_min", 0.0,
                        tri_mu[k] - min_mu[k], cfg.tol_spectral));

  // (f) discrete eigenvalues over n, one solve per n; the finest spectrum is
  // reused by (g)
  std::vector<std::vector<double>> over_n(cfg.n_list.size());
  Spectrum finest;
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    const std::size_t n = cfg.n_list[i];
    Spectrum s = jacobi_eigen(materialize(triangular_symbol(n)));
    over_n[i].resize(cfg.k_max + 1);
    for (std::size_t k = 0; k <= cfg.k_max; ++k)
      over_n[i][k] = s.eigenvalues[k] / static_cast<double>(n);
    if (i + 1 == cfg.n_list.size()) finest = std::move(s);
  }
  for (std::size_t k = 0; k <= cfg.k_max; ++k) {
    for (std::size_t i = 0; i < cfg.n_list.size(); ++i)
      e.push_back(compare("corollary_eig" + std::to_string(k) + "_over_n_n" +
                              std::to_string(cfg.n_list[i]),
                          claimed_lambda(k), over_n[i][k], cfg.tol_spectral));
    for (std::size_t i = 0; i + 1 < cfg.n_list.size(); ++i)
      e.push_back(compare("corollary_eig" + std::to_string(k) + "_drift_n" +
                              std::to_string(cfg.n_list[i]) + "_n" +
                              std::to_string(cfg.n_list[i + 1]),
                          0.0, std::fabs(over_n[i][k] - over_n[i + 1][k]), cfg.tol_spectral));
  }

  // (g) eigenvalue power sums of K_n / n at the finest mesh vs the series
  {
    const std::size_t nmax = cfg.n_list.back();
    for (unsigned p = 1; p <= cfg.p_max; ++p) {
      double powsum = 0.0;
      for (double lambda : finest.eigenvalues) {
        double term = lambda / static_cast<double>(nmax);
        for (unsigned i = 1; i < p; ++i) term *= lambda / static_cast<double>(nmax);
        powsum += term;
      }
      e.push_back(compare("power_sum_p" + std::to_string(p) + "_n" + std::to_string(nmax) +
                              "_vs_claimed_series",
                          claimed_trace_series(p, kSeriesTerms), powsum, cfg.tol_spectral));
    }
  }

  // (h) the cosine-sum approximation under both normalizations, plus the
  // Rayleigh probe of the approximate-eigenvector claim
  {
    const std::size_t nmax = cfg.n_list.back();
    for (std::size_t k = 0; k <= cfg.k_max; ++k) {
      const double sum_over_n = cosine_symbol_sum(nmax, k) / static_cast<double>(nmax);
      const double one_sided = one_sided_cosine_integral(k);
      e.push_back(compare("cosine_sum_k" + std::to_string(k) + "_over_n" + std::to_string(nmax) +
                              "_vs_symmetric_integral",
                          2.0 * one_sided, sum_over_n, cfg.tol_spectral));
      e.push_back(compare("cosine_sum_k" + std::to_string(k) + "_over_n" + std::to_string(nmax) +
                              "_vs_one_sided_integral",
                          one_sided, sum_over_n, cfg.tol_spectral));
    }
    const std::size_t nr = 200;
    std::vector<double> v(nr);
    for (std::size_t i = 0; i < nr; ++i)
      v[i] = std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(nr));
    const double ray = rayleigh(triangular_symbol(nr), v) / static_cast<double>(nr);
    e.push_back(compare("rayleigh_cosine1_n200_vs_cosine_sum",
                        cosine_symbol_sum(nr, 1) / static_cast<double>(nr), ray,
                        cfg.tol_spectral));
  }

  return report;
}

} // namespace toeplab
