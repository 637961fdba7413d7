#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fermigas/moments.hpp"

using namespace fermigas;

TEST_CASE("closed-form moments at pinned points") {
  CHECK(moment_closed_form(ShellSpec(2, 1), 1) == make_rational(5, 3));
  CHECK(moment_closed_form(ShellSpec(1, 0), 2) == make_rational(3, 4));  // Gaussian <x^4>
  CHECK(moment_closed_form(ShellSpec(3, 2), 0) == Rational(1));
}

TEST_CASE("recurrence table against the closed form") {
  const MomentTable t1 = moment_recurrence_table(ShellSpec(1, 0), 2);
  REQUIRE(t1.values.size() == 3);
  CHECK(t1.values[0] == Rational(1));
  CHECK(t1.values[1] == make_rational(1, 2));
  CHECK(t1.values[2] == make_rational(3, 4));
  CHECK(t1.provenance == MomentTable::Provenance::recurrence);

  CHECK(moment_recurrence_table(ShellSpec(2, 1), 1).values[1] == make_rational(5, 3));
  CHECK(moment_recurrence_table(ShellSpec(1, 1), 1).values[1] == Rational(1));

  for (int d = 1; d <= 4; ++d)
    for (int M = 0; M <= 10; ++M) {
      const ShellSpec spec(d, M);
      const MomentTable table = moment_recurrence_table(spec, 16);
      for (long long k = 0; k <= 16; ++k)
        REQUIRE(table.values[static_cast<std::size_t>(k)] == moment_closed_form(spec, k));
    }
}

TEST_CASE("real-k continuation hits the exact values at integers") {
  CHECK(std::abs(moment_real_k(ShellSpec(1, 3), 2.0) -
                 to_double(moment_closed_form(ShellSpec(1, 3), 2))) <=
        1e-12 * to_double(moment_closed_form(ShellSpec(1, 3), 2)));
  for (int d = 1; d <= 3; ++d)
    for (int M = 0; M <= 15; ++M)
      for (long long k = 0; k <= 10; ++k) {
        const double exact = to_double(moment_closed_form(ShellSpec(d, M), k));
        REQUIRE(std::abs(moment_real_k(ShellSpec(d, M), static_cast<double>(k)) - exact) <=
                1e-12 * exact);
      }
}

TEST_CASE("real-k continuation off the integers") {
  // M = 0 reduces the hypergeometric factor to 1
  CHECK(moment_real_k(ShellSpec(2, 0), 0.5) == Catch::Approx(std::sqrt(std::acos(-1.0)) / 2).epsilon(1e-12));
  // difference-equation residual at a non-integer argument
  CHECK(meixner_difference_residual(2, 1.5, 2.0, -1.0).relative() < 1e-10);
  CHECK_THROWS_AS(moment_real_k(ShellSpec(1, 2), -0.5), std::domain_error);
  CHECK_THROWS_AS(moment_real_k(ShellSpec(1, 2), -0.4999999), std::domain_error);
}

TEST_CASE("meixner polynomial basics") {
  CHECK(meixner(0, 7.3, 3.0, -1.0) == 1.0);

  // direct three-term series for n = 2, x = 1, beta = 2, c = -1:
  // 1 + (-2)(-1)/(1!*2) * 2 + (-2)(-1)*(-1)(0)/(2!*2*3) * 4
  const double direct = 1.0 + 2.0 + 0.0;
  CHECK(meixner(2, 1.0, 2.0, -1.0) == Catch::Approx(direct).epsilon(1e-14));

  // symmetry in (degree, argument) for integer arguments
  CHECK(meixner(3, 2.0, 4.0, -1.0) == Catch::Approx(meixner(2, 3.0, 4.0, -1.0)).epsilon(1e-13));

  CHECK_THROWS_AS(meixner(3, 1.0, -2.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(meixner(2, 1.0, 3.0, 0.0), std::domain_error);
}

TEST_CASE("meixner difference equation at scattered real arguments") {
  for (int d = 1; d <= 3; ++d)
    for (int M = 0; M <= 8; M += 2)
      for (int i = 0; i < 25; ++i) {
        const double x = -0.5 * d + 0.02 + (10.0 + 0.5 * d) * i / 25.0;
        REQUIRE(meixner_difference_residual(M, x, d + 1.0, -1.0).relative() < 1e-10);
      }
}

TEST_CASE("reflection between order and shell label") {
  CHECK(reflection_check(1, 3, 5));
  CHECK(reflection_check(2, 0, 4));
  CHECK(reflection_check(4, 2, 2));
  for (int d = 1; d <= 4; ++d)
    for (long long k = 0; k <= 12; ++k)
      for (long long M = 0; M <= 12; ++M) REQUIRE(reflection_check(d, k, M));
}

TEST_CASE("angular coefficients") {
  CHECK(f_coefficient(1, 3) == Rational(3));
  CHECK(f_coefficient(0, 1) == Rational(1));
  CHECK(f_coefficient(0, 5) == Rational(1));
  CHECK(f_coefficient(2, 1) == Rational(1));
}

TEST_CASE("one-dimensional moments as a Gauss hypergeometric value") {
  for (int M = 0; M <= 10; ++M)
    for (long long k = 0; k <= 12; ++k) {
      const Rational lhs = pow2(k) * moment_closed_form(ShellSpec(1, M), k);
      const Rational prefactor =
          Rational(factorial(2 * k)) / (pow2(k) * Rational(factorial(k)));
      const Rational rhs =
          prefactor * hypergeometric_2f1_terminating(k, M, Rational(2), Rational(2));
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("moments are parity polynomials in the shifted shell parameter") {
  // degree k: the (k+1)-st finite difference across consecutive shells vanishes
  for (int d = 1; d <= 3; ++d)
    for (long long k = 1; k <= 8; ++k) {
      std::vector<Rational> diff;
      for (int M = 0; M <= static_cast<int>(k) + 2; ++M)
        diff.push_back(moment_closed_form(ShellSpec(d, M), k));
      for (long long pass = 0; pass <= k; ++pass)
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
      diff.resize(diff.size() - static_cast<std::size_t>(k) - 1);
      for (const Rational& v : diff) REQUIRE(v == 0);
    }
}
