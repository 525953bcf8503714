#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toeplab/errors.hpp"

namespace toeplab {

/// Dense row-major matrix of doubles. Plain storage, no algebraic smarts.
struct DenseMatrix {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<double> entries; // row-major, n_rows * n_cols

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : n_rows(rows), n_cols(cols), entries(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  double& at(std::size_t i, std::size_t j) { return entries[i * n_cols + j]; }
  double at(std::size_t i, std::size_t j) const { return entries[i * n_cols + j]; }

  bool square() const { return n_rows == n_cols; }
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& m);
double diagonal_sum(const DenseMatrix& m);
double frobenius_norm(const DenseMatrix& m);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Determinant via LU with partial pivoting. Singular inputs come back as ~0.
double lu_determinant(const DenseMatrix& m);

/// Univariate profile f on [-1, 1] used to generate size-scaled Toeplitz
/// coefficients a_k = f(k/n). Builtins plus tabulated profiles with linear
/// interpolation between nodes.
class KernelFunction {
public:
  static KernelFunction triangular(); // f(x) = 1 - |x|
  static KernelFunction constant(double value = 1.0);
  /// Tabulated profile; xs must be strictly increasing, at least 2 nodes.
  /// Evaluation outside [xs.front(), xs.back()] is a DomainError.
  static KernelFunction tabulated(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;

private:
  enum class Kind { Triangular, Constant, Tabulated };
  Kind kind_ = Kind::Triangular;
  double value_ = 1.0;
  std::vector<double> xs_, ys_;
};

/// An n x n Toeplitz matrix stored as its 2n-1 diagonal coefficients
/// a_{-(n-1)}, ..., a_{n-1}; the value a_k sits on the diagonal i - j = k
/// (1-based matrix indices). Storage is 0-based with offset n-1.
class ToeplitzSymbol {
public:
  /// coeffs holds a_{-(n-1)}..a_{n-1} in ascending k; must have length 2n-1.
  /// The symmetric flag is detected from exact equality a_k == a_{-k}.
  ToeplitzSymbol(std::size_t n, std::vector<double> coeffs);

  std::size_t order() const { return n_; }
  bool symmetric() const { return symmetric_; }

  /// a_k for |k| <= n-1; out-of-range k is a DomainError.
  double coeff(long k) const;
  const std::vector<double>& coeffs() const { return coeffs_; }

private:
  std::size_t n_;
  std::vector<double> coeffs_; // index k + (n-1)
  bool symmetric_;
};

/// Symbol with a_k = f(k/n). The symmetric flag reflects evenness of f on the
/// evaluated points.
ToeplitzSymbol from_scaled_kernel(const KernelFunction& f, std::size_t n);

/// The matrix K_n: a_m = 1 - |m|/n. Identical, coefficient for coefficient,
/// to from_scaled_kernel(triangular, n).
ToeplitzSymbol triangular_symbol(std::size_t n);

/// Dense n x n matrix with entry (i, j) = a_{i-j}.
DenseMatrix materialize(const ToeplitzSymbol& s);

/// Exact O(n^2) product without materializing.
std::vector<double> matvec_naive(const ToeplitzSymbol& s, std::span<const double> v);

/// Product via circulant embedding of size = smallest power of two >= 2n-1
/// and a radix-2 transform.
std::vector<double> matvec_fft(const ToeplitzSymbol& s, std::span<const double> v);

/// n * a_0.
double trace(const ToeplitzSymbol& s);

} // namespace toeplab
