#include "toeplab/banded.hpp"

#include <cmath>

namespace toeplab {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

double IntPolynomial::eval(double x) const {
  double acc = 0.0;
  for (std::size_t j = c_.size(); j-- > 0;) acc = acc * x + static_cast<double>(c_[j]);
  return acc;
}

ToeplitzSymbol banded_symbol(std::size_t n, double x) {
  if (n == 0) throw DomainError("banded_symbol: order must be positive");
  std::vector<double> coeffs(2 * n - 1, 0.0);
  coeffs[n - 1] = 1.0;                // a_0
  if (n >= 2) {
    coeffs[n - 2] = x;                // a_{-1}: superdiagonal
    coeffs[n] = -1.0;                 // a_{+1}: subdiagonal
  }
  return ToeplitzSymbol(n, std::move(coeffs));
}

IntPolynomial det_recurrence(std::size_t n) {
  if (n == 0) throw DomainError("det_recurrence: order must be positive");
  if (n > 90) throw SizeGuardError("det_recurrence: n > 90 overflows 64-bit coefficients");
  // D_m = D_{m-1} + x D_{m-2}, D_0 = D_1 = 1 (cofactor expansion on the last row)
  std::vector<std::int64_t> prev = {1}; // D_0
  std::vector<std::int64_t> cur = {1};  // D_1
  for (std::size_t m = 2; m <= n; ++m) {
    std::vector<std::int64_t> next(std::max(cur.size(), prev.size() + 1), 0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j] += cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j + 1] += prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return IntPolynomial(std::move(cur));
}

namespace {

int inversion_sign(const std::vector<int>& sigma) {
  int inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Permutations with |sigma(i) - i| <= 1 are exactly the monomer/domino
// tilings: position i is fixed or swapped with i+1.
void enumerate_bounded(std::vector<int>& sigma, std::size_t pos,
                       std::vector<std::int64_t>& accum) {
  const std::size_t n = sigma.size();
  if (pos == n) {
    // the displayed summand, each factor computed on its own
    int forward = 0, backward = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (sigma[i] == static_cast<int>(i) + 2) ++forward;  // sigma(i) = i+1
      if (sigma[i] == static_cast<int>(i)) ++backward;     // sigma(i) = i-1
    }
    const std::int64_t term =
        static_cast<std::int64_t>(inversion_sign(sigma)) * (backward % 2 == 0 ? 1 : -1);
    accum[static_cast<std::size_t>(forward)] += term;
    return;
  }
  sigma[pos] = static_cast<int>(pos) + 1; // fixed point
  enumerate_bounded(sigma, pos + 1, accum);
  if (pos + 1 < n) { // adjacent transposition (pos, pos+1)
    sigma[pos] = static_cast<int>(pos) + 2;
    sigma[pos + 1] = static_cast<int>(pos) + 1;
    enumerate_bounded(sigma, pos + 2, accum);
  }
}

} // namespace

IntPolynomial det_leibniz_bounded(std::size_t n) {
  if (n == 0) throw DomainError("det_leibniz_bounded: order must be positive");
  if (n > 20) throw SizeGuardError("det_leibniz_bounded: enumeration guarded at n <= 20");
  std::vector<std::int64_t> accum(n / 2 + 1, 0);
  std::vector<int> sigma(n, 0);
  enumerate_bounded(sigma, 0, accum);
  return IntPolynomial(std::move(accum));
}

double det_numeric(std::size_t n, double x_value) {
  return lu_determinant(materialize(banded_symbol(n, x_value)));
}

} // namespace toeplab
