#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toeplab/toeplitz.hpp"

namespace toeplab {

struct JacobiOptions {
  double tolerance = 1e-12; // stop when off-diagonal Frobenius <= tolerance * ||m||_F
  int max_sweeps = 50;
};

struct Spectrum {
  std::vector<double> eigenvalues; // sorted descending
  int sweeps = 0;
  double off_norm = 0.0; // final off-diagonal Frobenius norm
};

/// Cyclic-by-row Jacobi eigensolver for symmetric matrices. Input must be
/// square and symmetric within 1e-12 componentwise; exhausting max_sweeps is
/// a ConvergenceError.
Spectrum jacobi_eigen(const DenseMatrix& m, const JacobiOptions& opts = {});

/// sum_{m=-(n-1)}^{n-1} (1 - |m|/n) cos(pi k m / n): the cosine-sum
/// eigenvalue approximation for K_n before the 1/n normalization.
/// Exactly n at k = 0.
double cosine_symbol_sum(std::size_t n, std::size_t k);

/// (v . Sv) / (v . v) via matvec_naive. Zero vector is a DomainError.
double rayleigh(const ToeplitzSymbol& s, std::span<const double> v);

/// (1/n) sum_j lambda_j(m)^p via jacobi_eigen.
double trace_powers(const DenseMatrix& m, unsigned p, const JacobiOptions& opts = {});

/// The closed-form eigenvalue claim 4 / (pi^2 (2k+1)^2) for the triangular
/// kernel operator. (It is realized exactly by the kernel min(x, y); the
/// discrepancy report measures how far the triangular kernel is from it.)
double claimed_lambda(std::size_t k);

/// Partial series sum_{k < terms} claimed_lambda(k)^p, summed smallest term
/// first.
double claimed_trace_series(unsigned p, std::size_t terms);

/// Upper bound on the tail of claimed_trace_series:
/// (4/pi^2)^p (2 terms)^(1-2p) / (2p - 1).
double claimed_trace_series_tail(unsigned p, std::size_t terms);

} // namespace toeplab
