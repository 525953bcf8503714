#include "toeplab/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

namespace toeplab {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_cols != b.n_rows) throw DimensionError("multiply: inner extents differ");
  DenseMatrix c(a.n_rows, b.n_cols);
  for (std::size_t i = 0; i < a.n_rows; ++i)
    for (std::size_t k = 0; k < a.n_cols; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.n_cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix t(m.n_cols, m.n_rows);
  for (std::size_t i = 0; i < m.n_rows; ++i)
    for (std::size_t j = 0; j < m.n_cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

double diagonal_sum(const DenseMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(m.n_rows, m.n_cols); ++i) s += m.at(i, i);
  return s;
}

double frobenius_norm(const DenseMatrix& m) {
  double s = 0.0;
  for (double v : m.entries) s += v * v;
  return std::sqrt(s);
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_rows != b.n_rows || a.n_cols != b.n_cols)
    throw DimensionError("max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    worst = std::max(worst, std::fabs(a.entries[i] - b.entries[i]));
  return worst;
}

double lu_determinant(const DenseMatrix& m) {
  if (!m.square()) throw DimensionError("lu_determinant: matrix not square");
  const std::size_t n = m.n_rows;
  DenseMatrix a = m;
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a.at(r, col)) > std::fabs(a.at(pivot, col))) pivot = r;
    if (a.at(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a.at(r, col) / a.at(col, col);
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a.at(r, j) -= factor * a.at(col, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// KernelFunction
// ---------------------------------------------------------------------------

KernelFunction KernelFunction::triangular() {
  KernelFunction f;
  f.kind_ = Kind::Triangular;
  return f;
}

KernelFunction KernelFunction::constant(double value) {
  KernelFunction f;
  f.kind_ = Kind::Constant;
  f.value_ = value;
  return f;
}

KernelFunction KernelFunction::tabulated(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() < 2) throw DomainError("tabulated profile needs at least 2 nodes");
  if (xs.size() != ys.size()) throw DimensionError("tabulated profile: xs/ys length mismatch");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1])) throw DomainError("tabulated profile: xs must be strictly increasing");
  KernelFunction f;
  f.kind_ = Kind::Tabulated;
  f.xs_ = std::move(xs);
  f.ys_ = std::move(ys);
  return f;
}

double KernelFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::Triangular: return 1.0 - std::fabs(x);
    case Kind::Constant: return value_;
    case Kind::Tabulated: break;
  }
  if (x < xs_.front() || x > xs_.back())
    throw DomainError("tabulated profile undefined at requested point");
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end()) return ys_.back(); // x == xs_.back()
  const std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
  if (hi == 0) return ys_.front();
  const std::size_t lo = hi - 1;
  const double t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return ys_[lo] + t * (ys_[hi] - ys_[lo]);
}

// ---------------------------------------------------------------------------
// ToeplitzSymbol
// ---------------------------------------------------------------------------

ToeplitzSymbol::ToeplitzSymbol(std::size_t n, std::vector<double> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n_ == 0) throw DomainError("ToeplitzSymbol: order must be positive");
  if (coeffs_.size() != 2 * n_ - 1)
    throw DimensionError("ToeplitzSymbol: coefficient count must be 2n-1");
  symmetric_ = true;
  for (std::size_t m = 1; m < n_ && symmetric_; ++m)
    symmetric_ = coeffs_[(n_ - 1) + m] == coeffs_[(n_ - 1) - m];
}

double ToeplitzSymbol::coeff(long k) const {
  const long bound = static_cast<long>(n_) - 1;
  if (k < -bound || k > bound) throw DomainError("ToeplitzSymbol::coeff: |k| exceeds n-1");
  return coeffs_[static_cast<std::size_t>(k + bound)];
}

ToeplitzSymbol from_scaled_kernel(const KernelFunction& f, std::size_t n) {
  if (n == 0) throw DomainError("from_scaled_kernel: n must be positive");
  std::vector<double> coeffs(2 * n - 1);
  const long bound = static_cast<long>(n) - 1;
  for (long k = -bound; k <= bound; ++k)
    coeffs[static_cast<std::size_t>(k + bound)] = f(static_cast<double>(k) / static_cast<double>(n));
  return ToeplitzSymbol(n, std::move(coeffs));
}

ToeplitzSymbol triangular_symbol(std::size_t n) {
  return from_scaled_kernel(KernelFunction::triangular(), n);
}

DenseMatrix materialize(const ToeplitzSymbol& s) {
  const std::size_t n = s.order();
  const std::vector<double>& c = s.coeffs();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = c[i - j + (n - 1)]; // diagonal index k = i - j
  return m;
}

std::vector<double> matvec_naive(const ToeplitzSymbol& s, std::span<const double> v) {
  const std::size_t n = s.order();
  if (v.size() != n) throw DimensionError("matvec_naive: vector length != n");
  const std::vector<double>& c = s.coeffs();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    const double* row = c.data() + (i + n - 1); // c[row - j] = a_{i-j}
    for (std::size_t j = 0; j < n; ++j) acc += row[-static_cast<long>(j)] * v[j];
    y[i] = acc;
  }
  return y;
}

namespace {

// In-place iterative radix-2 transform; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> w = std::polar(1.0, ang * static_cast<double>(j));
        const std::complex<double> u = a[i + j];
        const std::complex<double> t = a[i + j + len / 2] * w;
        a[i + j] = u + t;
        a[i + j + len / 2] = u - t;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& z : a) z *= inv;
  }
}

} // namespace

std::vector<double> matvec_fft(const ToeplitzSymbol& s, std::span<const double> v) {
  const std::size_t n = s.order();
  if (v.size() != n) throw DimensionError("matvec_fft: vector length != n");
  std::size_t len = 1;
  while (len < 2 * n - 1) len <<= 1;

  // First circulant column: c[m] = a_m for m >= 0, c[len - m] = a_{-m}.
  std::vector<std::complex<double>> c(len), x(len);
  const std::vector<double>& a = s.coeffs();
  c[0] = a[n - 1];
  for (std::size_t m = 1; m < n; ++m) {
    c[m] = a[(n - 1) + m];
    c[len - m] = a[(n - 1) - m];
  }
  for (std::size_t j = 0; j < n; ++j) x[j] = v[j];

  fft_radix2(c, false);
  fft_radix2(x, false);
  for (std::size_t i = 0; i < len; ++i) c[i] *= x[i];
  fft_radix2(c, true);

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = c[i].real();
  return y;
}

double trace(const ToeplitzSymbol& s) {
  return static_cast<double>(s.order()) * s.coeff(0);
}

} // namespace toeplab
