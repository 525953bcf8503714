#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "toeplab/nilpotent.hpp"

using namespace toeplab;

namespace {

// exhaustive count of k-step {stay, right} sequences with exactly s rights
std::int64_t count_step_sequences(unsigned k, unsigned s) {
  std::int64_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask)
    if (static_cast<unsigned>(__builtin_popcountll(mask)) == s) ++count;
  return count;
}

void check_entrywise(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  REQUIRE(a.n_rows == b.n_rows);
  REQUIRE(a.n_cols == b.n_cols);
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    CHECK(std::fabs(a.entries[i] - b.entries[i]) <=
          tol * std::max(1.0, std::fabs(a.entries[i])));
}

} // namespace

TEST_CASE("binomial table") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(62, 31) == 465428353255261088LL);
  CHECK(binomial(5, 9) == 0);
  CHECK_THROWS_AS(binomial(63, 1), SizeGuardError);
}

TEST_CASE("power_binomial") {
  SUBCASE("k = 0 is the identity") {
    const DenseMatrix m = power_binomial({4, 3.7}, 0);
    CHECK(m.entries == DenseMatrix::identity(4).entries);
  }
  SUBCASE("square by hand") {
    const double x = -1.75;
    const DenseMatrix m = power_binomial({3, x}, 2);
    CHECK(m.at(0, 0) == 1.0);
    CHECK(m.at(0, 1) == 2.0 * x);
    CHECK(m.at(0, 2) == x * x);
    CHECK(m.at(1, 2) == 2.0 * x);
    CHECK(m.at(1, 0) == 0.0);
  }
  SUBCASE("named entry k=10, offset 3") {
    const DenseMatrix m = power_binomial({4, 1.5}, 10);
    CHECK(m.at(0, 3) == doctest::Approx(120.0 * 1.5 * 1.5 * 1.5).epsilon(1e-12));
  }
  CHECK_THROWS_AS(power_binomial({4, 1.0}, 63), SizeGuardError);
}

TEST_CASE("power_direct cross-checks power_binomial") {
  SUBCASE("k = 1 is the matrix itself") {
    const DenseMatrix m = power_direct({5, 2.5}, 1);
    CHECK(m.entries == power_binomial({5, 2.5}, 1).entries);
  }
  SUBCASE("x = 0 collapses to the identity for any k") {
    CHECK(power_direct({6, 0.0}, 40).entries == DenseMatrix::identity(6).entries);
  }
  SUBCASE("agreement across sizes, exponents, and x values") {
    for (std::size_t n : {1u, 8u, 16u})
      for (unsigned k : {2u, 10u, 31u, 62u})
        for (double x : {-1.0, 0.5, 2.0})
          check_entrywise(power_binomial({n, x}, k), power_direct({n, x}, k), 1e-9);
  }
  SUBCASE("bandwidth truncates at n-1 once k >= n") {
    const DenseMatrix m = power_binomial({4, 0.5}, 10);
    check_entrywise(m, power_direct({4, 0.5}, 10), 1e-9);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (j < i) CHECK(m.at(i, j) == 0.0);
  }
  SUBCASE("exponent additivity") {
    for (unsigned a : {3u, 17u})
      for (unsigned b : {5u, 40u}) {
        const UnipotentSpec spec{9, -0.75};
        const DenseMatrix lhs = power_binomial(spec, a + b);
        const DenseMatrix rhs = multiply(power_binomial(spec, a), power_binomial(spec, b));
        check_entrywise(lhs, rhs, 1e-9);
      }
  }
  CHECK_THROWS_AS(power_direct({3, 1.0}, (1UL << 20) + 1), SizeGuardError);
}

TEST_CASE("eigenvalues_unipotent") {
  const std::vector<double> ev = eigenvalues_unipotent({5, 123.0});
  CHECK(ev == std::vector<double>(5, 1.0));
  for (double x : {0.0, 1.0, -3.5, 10.0})
    for (std::size_t n : {1u, 4u, 16u}) CHECK_NOTHROW(eigenvalues_unipotent({n, x}));

  SUBCASE("characteristic determinant samples") {
    // det(T_4(x)) = 1, det(T_3(x) - 2I) = (1-2)^3 = -1
    for (double x : {0.0, 2.0, -5.0}) {
      DenseMatrix t4 = power_binomial({4, x}, 1);
      CHECK(lu_determinant(t4) == doctest::Approx(1.0).epsilon(1e-12));
      DenseMatrix t3 = power_binomial({3, x}, 1);
      for (std::size_t i = 0; i < 3; ++i) t3.at(i, i) -= 2.0;
      CHECK(lu_determinant(t3) == doctest::Approx(-1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("path_count") {
  for (unsigned k : {0u, 4u, 9u}) {
    const PathMonomial p = path_count(6, k, 3, 3);
    CHECK(p.coefficient == 1);
    CHECK(p.power == 0);
  }
  const PathMonomial forward = path_count(8, 3, 2, 4);
  CHECK(forward.coefficient == 3);
  CHECK(forward.power == 2);
  const PathMonomial backward = path_count(8, 3, 4, 2);
  CHECK(backward.coefficient == 0);
  CHECK(backward.power == 0);
  CHECK(path_count(4, 10, 1, 4).coefficient == binomial(10, 3));
  CHECK_THROWS_AS(path_count(4, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(path_count(4, 2, 1, 5), DomainError);

  SUBCASE("coefficient equals exhaustive step-sequence enumeration") {
    for (unsigned k = 0; k <= 12; ++k)
      for (unsigned s = 0; s <= k; ++s) {
        const PathMonomial p = path_count(16, k, 1, 1 + s);
        CHECK(p.coefficient == count_step_sequences(k, s));
      }
  }
  SUBCASE("row sums at x = 1 are partial sums of 2^k") {
    const unsigned k = 6;
    const DenseMatrix m = power_binomial({10, 1.0}, k);
    for (std::size_t i = 0; i < 10; ++i) {
      double row_sum = 0.0;
      for (std::size_t j = 0; j < 10; ++j) row_sum += m.at(i, j);
      std::int64_t expected = 0;
      for (std::size_t j = i; j < 10 && j - i <= k; ++j) expected += binomial(k, static_cast<unsigned>(j - i));
      CHECK(row_sum == static_cast<double>(expected));
    }
  }
}
