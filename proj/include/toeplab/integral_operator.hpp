#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toeplab/spectra.hpp"
#include "toeplab/toeplitz.hpp"

namespace toeplab {

/// Kernels on [0,1]^2. All three are symmetric.
enum class KernelId {
  Triangular,    // 1 - |x - y|
  BrownianMin,   // min(x, y), the comparison kernel whose spectrum the
                 // claimed formula actually describes
  ConvIndicator, // integral over t in [0,1] of 1_{[0,1]}(x-t) 1_{[0,1]}(y-t),
                 // evaluated in closed form (interval overlap length)
};

/// A claimed continuous eigenpair: frequency omega, eigenvalue lambda and a
/// trig profile phi(x). cosine_claim(k) is the claimed pair for the
/// triangular kernel; sine_claim(k) is the positive control that genuinely
/// diagonalizes min(x, y). zero_profile() is the trivial residual-0 input.
struct EigenpairClaim {
  std::size_t k = 0;
  double omega = 0.0;  // (2k+1) pi / 2
  double lambda = 0.0; // 4 / (pi^2 (2k+1)^2)
  enum class Profile { Cosine, Sine, Zero } profile = Profile::Cosine;

  static EigenpairClaim cosine_claim(std::size_t k);
  static EigenpairClaim sine_claim(std::size_t k);
  static EigenpairClaim zero_profile();

  double phi(double x) const;
};

struct ReportEntry {
  std::string quantity;
  double paper_value = 0.0; // ignored when has_paper_value is false
  bool has_paper_value = true;
  double computed_value = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0; // ignored when has_rel_diff is false
  bool has_rel_diff = true;
  double tolerance = 0.0;
  enum class Verdict { Match, Mismatch, Unverified } verdict = Verdict::Unverified;
};

struct DiscrepancyReport {
  std::vector<ReportEntry> entries;
};

struct ReportConfig {
  std::size_t m = 400;           // Nystrom mesh
  std::size_t quad_points = 4096;
  std::vector<std::size_t> n_list = {100, 200, 400};
  std::size_t k_max = 4;
  unsigned p_max = 3;
  double tol_spectral = 1e-3; // mesh-limited spectral comparisons
  double tol_identity = 1e-8; // quadrature/pointwise identities
};

/// K(x, y) for x, y in [0, 1]; outside is a DomainError.
double kernel_eval(KernelId id, double x, double y);

/// Midpoint-node Nystrom matrix: entries K(x_i, x_j) / m at x_i = (i-1/2)/m.
DenseMatrix nystrom(KernelId id, std::size_t m);

/// The `top` largest Nystrom eigenvalues (top <= m).
std::vector<double> nystrom_spectrum(KernelId id, std::size_t m, std::size_t top);

/// L^2[0,1] norm of K phi - lambda phi. The inner integral is evaluated by
/// the exact piecewise antiderivative split at y = x (the kernels are
/// piecewise linear in y); only the outer norm uses midpoint quadrature.
double eigenfunction_residual(KernelId id, const EigenpairClaim& claim,
                              std::size_t quad_points);

/// Composite-midpoint value of the integral over [0,1] of
/// (1-t) cos((2k+1) pi t / 2): the one displayed identity that checks out,
/// equal to 4 / (pi^2 (2k+1)^2).
double lemma_integral(std::size_t k, std::size_t quad_points);

/// Midpoint quadrature of the kernel diagonal, integral of K(x, x).
double operator_trace(KernelId id, std::size_t quad_points);

struct CorollaryRow {
  std::size_t n = 0;
  double lambda_k_n_over_n = 0.0;
  double paper_target = 0.0; // claimed_lambda(k)
};

/// (k+1)-th largest eigenvalue of K_n divided by n, for each n in n_list,
/// next to the claimed limit. Requires every n >= k + 2.
std::vector<CorollaryRow> corollary_convergence(std::size_t k,
                                                const std::vector<std::size_t>& n_list);

/// Runs every check and assembles the report in a fixed entry order:
/// (a) pointwise conv-indicator vs triangular grid max;
/// (b) lemma integrals; (c) eigenfunction residuals (claims + controls);
/// (d) operator trace vs claimed eigenvalue sum; (e) Nystrom spectra vs the
/// claimed values and across kernels; (f) discrete eigenvalue convergence
/// table with refinement drift; (g) eigenvalue power sums vs the claimed
/// series; (h) cosine sums under both normalizations plus the Rayleigh probe.
DiscrepancyReport build_discrepancy_report(const ReportConfig& config);

} // namespace toeplab
