#pragma once

#include <cstdint>
#include <vector>

#include "toeplab/toeplitz.hpp"

namespace toeplab {

/// Polynomial with exact 64-bit integer coefficients, ascending powers.
/// Canonical form: no trailing zeros; the zero polynomial is empty.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::int64_t coefficient(std::size_t j) const { return j < c_.size() ? c_[j] : 0; }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  double eval(double x) const; // Horner

  bool operator==(const IntPolynomial& other) const = default;

private:
  std::vector<std::int64_t> c_;
};

/// The tridiagonal matrix E_n(x): 1 on the diagonal, x on the superdiagonal,
/// -1 on the subdiagonal (the orientation of the worked 4x4 example; the
/// determinant is the same for the transpose).
ToeplitzSymbol banded_symbol(std::size_t n, double x);

/// det(E_n(x)) as an exact integer polynomial, via the cofactor recurrence
/// D_n = D_{n-1} + x D_{n-2}, D_0 = D_1 = 1. Guarded at n <= 90 so every
/// coefficient stays inside 64 bits (they are bounded by Fibonacci(n+1)).
IntPolynomial det_recurrence(std::size_t n);

/// Leibniz sum restricted to permutations with |sigma(i) - i| <= 1,
/// accumulating sgn(sigma) * x^{#forward} * (-1)^{#backward} with the three
/// factors computed independently. n <= 20 (the count of contributing
/// permutations is Fibonacci-sized).
IntPolynomial det_leibniz_bounded(std::size_t n);

/// LU determinant of the materialized E_n(x).
double det_numeric(std::size_t n, double x_value);

} // namespace toeplab
