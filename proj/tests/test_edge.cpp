#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>

#include "fermigas/edge.hpp"

using namespace fermigas;

namespace {

// Independent Airy oracle: the Maclaurin series summed in 100-digit floats.
// At x = 20 the leading terms reach ~1e26 against a ~1e-27 result, eating
// roughly 53 digits to cancellation; 100 digits leave a wide margin.
using BigFloat = boost::multiprecision::cpp_bin_float_100;

BigFloat airy_oracle(double x_in) {
  const BigFloat x = x_in;
  const BigFloat x3 = x * x * x;
  const BigFloat ai0("0.3550280538878172392600631860041831763979791741991772405833"
                     "16593847994287066169879546230383584655157949141064");
  const BigFloat aip0("-0.258819403792806798405183560189203963479709138958179324757"
                      "95930895677380223967035805554575951960286096387198");
  BigFloat f = 1, tf = 1, g = x, tg = x;
  for (int k = 0; k < 400; ++k) {
    tf *= x3 / ((3 * k + 2) * (3 * k + 3));
    tg *= x3 / ((3 * k + 3) * (3 * k + 4));
    f += tf;
    g += tg;
    if (abs(tf) + abs(tg) < BigFloat("1e-80") * (abs(f) + abs(g) + 1)) break;
  }
  return ai0 * f + aip0 * g;
}

BigFloat airy_prime_oracle(double x_in) {
  const BigFloat x = x_in;
  const BigFloat x3 = x * x * x;
  const BigFloat ai0("0.3550280538878172392600631860041831763979791741991772405833"
                     "16593847994287066169879546230383584655157949141064");
  const BigFloat aip0("-0.258819403792806798405183560189203963479709138958179324757"
                      "95930895677380223967035805554575951960286096387198");
  BigFloat fp = x * x / 2, tfp = fp;
  for (int k = 1; k < 400; ++k) {
    tfp *= x3 / ((3 * k) * (3 * k + 2));
    fp += tfp;
    if (abs(tfp) < BigFloat("1e-80") * (abs(fp) + 1)) break;
  }
  BigFloat gp = 1, tgp = 1;
  for (int k = 0; k < 400; ++k) {
    tgp *= x3 / ((3 * k + 1) * (3 * k + 3));
    gp += tgp;
    if (abs(tgp) < BigFloat("1e-80") * (abs(gp) + 1)) break;
  }
  return ai0 * fp + aip0 * gp;
}

}  // namespace

TEST_CASE("airy value at zero") {
  // 3^{-2/3} / Gamma(2/3)
  CHECK(airy_ai(0.0) == Catch::Approx(0.3550280538878172).epsilon(1e-14));
  CHECK(airy_ai_prime(0.0) == Catch::Approx(-0.2588194037928068).epsilon(1e-14));
}

TEST_CASE("airy matches the high-precision oracle across the window") {
  double worst = 0.0, worst_prime = 0.0;
  for (int i = 0; i <= 350; ++i) {
    const double x = -15.0 + 35.0 * i / 350.0;
    const double err = std::abs(airy_ai(x) - static_cast<double>(airy_oracle(x)));
    const double err_prime =
        std::abs(airy_ai_prime(x) - static_cast<double>(airy_prime_oracle(x)));
    worst = std::max(worst, err);
    worst_prime = std::max(worst_prime, err_prime);
  }
  // both sides of the series/asymptotics switch
  for (double x : {7.999, 8.001, -7.999, -8.001, 8.0, -8.0}) {
    const double err = std::abs(airy_ai(x) - static_cast<double>(airy_oracle(x)));
    REQUIRE(err < 1e-10);
  }
  CHECK(worst < 1e-10);
  CHECK(worst_prime < 1e-10);
}

TEST_CASE("airy defining equation via finite differences") {
  const double h = 1e-4;
  for (double x : {-2.0, 0.0, 3.0}) {
    const double second = (airy_ai(x + h) - 2.0 * airy_ai(x) + airy_ai(x - h)) / (h * h);
    REQUIRE(std::abs(second - x * airy_ai(x)) < 1e-6);
  }
}

TEST_CASE("airy is positive and decreasing on the right half line") {
  double previous = airy_ai(0.0);
  for (int i = 1; i <= 80; ++i) {
    const double x = 20.0 * i / 80.0;
    const double value = airy_ai(x);
    REQUIRE(value > 0.0);
    REQUIRE(value < previous);
    previous = value;
  }
}

TEST_CASE("airy range guard") {
  CHECK_THROWS_AS(airy_ai(-15.5), std::domain_error);
  CHECK_THROWS_AS(airy_ai(20.5), std::domain_error);
}

TEST_CASE("edge profile pins and decay") {
  // F_1(0) equals Ai'(0)^2: high-precision reference 0.066987483779663974...
  CHECK(edge_profile(1, 0.0) == Catch::Approx(0.06698748377966397).epsilon(1e-9));
  // independent reference values (40-digit quadrature, frozen)
  CHECK(edge_profile(2, 0.0) == Catch::Approx(0.03269441961078395).epsilon(1e-9));
  CHECK(edge_profile(1, -1.0) == Catch::Approx(0.2869286968370163).epsilon(1e-9));
  CHECK(edge_profile(2, 2.0) == Catch::Approx(0.0001475859592610182).epsilon(1e-8));

  for (int d = 1; d <= 3; ++d) CHECK(edge_profile(d, 6.0) < 1e-6);
}

TEST_CASE("edge profile is reproducible across tolerance settings") {
  const double tight = edge_profile(2, 0.0, {1e-13, 1e-13});
  const double loose = edge_profile(2, 0.0, {1e-10, 1e-10});
  CHECK(std::abs(tight - loose) < 1e-8);
}

TEST_CASE("edge profile is positive and decreasing for s >= 0") {
  for (int d = 1; d <= 3; ++d) {
    double previous = 1e300;
    for (int i = 0; i <= 12; ++i) {
      const double s = 6.0 * i / 12.0;
      const double value = edge_profile(d, s);
      REQUIRE(value > 0.0);
      REQUIRE(value < previous);
      previous = value;
    }
  }
}

TEST_CASE("edge profile grows like the bulk power toward the interior") {
  // F_1(s) approaches |s|^{1/2}/pi going down the bulk side
  for (double s : {-6.0, -5.0, -4.0}) {
    const double ratio = edge_profile(1, s) / std::sqrt(-s);
    REQUIRE(std::abs(ratio * std::numbers::pi - 1.0) < 0.15);
  }
}

TEST_CASE("edge equation residual contracts") {
  CHECK(edge_ode_residual(1, 0.0).relative() < 1e-6);
  CHECK(edge_ode_residual(2, -2.0).relative() < 1e-6);
  CHECK(edge_ode_residual(3, 1.5).relative() < 1e-6);
  for (int d = 1; d <= 3; ++d)
    for (int i = 0; i < 21; ++i) {
      const double s = -5.0 + 8.0 * i / 20.0;
      REQUIRE(edge_ode_residual(d, s).relative() <= 1e-6);
    }
}

TEST_CASE("finite-shell edge values converge to the profile") {
  // gap shrinks when the shell count doubles
  for (int d : {1, 2})
    for (double s : {-1.0, 0.0, 1.0}) {
      const double gap8 = edge_convergence(ShellSpec(d, 8), s).gap;
      const double gap16 = edge_convergence(ShellSpec(d, 16), s).gap;
      const double gap32 = edge_convergence(ShellSpec(d, 32), s).gap;
      REQUIRE(gap16 < gap8);
      REQUIRE(gap32 < gap16);
    }

  // decay consistency in the outer tail
  const EdgeConvergence far = edge_convergence(ShellSpec(2, 12), 2.0);
  CHECK(far.finite_value < 1e-1);
  CHECK(far.limit_value < 1e-1);
  CHECK(far.gap < far.finite_value);

  // monotone trend toward the limit on the bulk side
  const double limit = edge_profile(1, -1.0);
  double previous_gap = 1e300;
  for (int M : {8, 16, 32}) {
    const EdgeConvergence conv = edge_convergence(ShellSpec(1, M), -1.0);
    REQUIRE(conv.finite_value < limit);
    REQUIRE(conv.gap < previous_gap);
    previous_gap = conv.gap;
  }
  CHECK_THROWS_AS(edge_convergence(ShellSpec(1, 3), 0.0), std::domain_error);
}

TEST_CASE("edge samples carry their grid") {
  const EdgeProfileSamples samples = sample_edge_profile(1, -2.0, 2.0, 9);
  REQUIRE(samples.s.size() == 9);
  CHECK(samples.s.front() == -2.0);
  CHECK(samples.s.back() == 2.0);
  for (double v : samples.values) CHECK(v > 0.0);
}
