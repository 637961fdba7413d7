#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "fermigas/density.hpp"
#include "fermigas/moments.hpp"
#include "fermigas/quadrature.hpp"

using namespace fermigas;

namespace {

// Brute-force density: enumerate every level array with sum <= M and
// accumulate the product of squared eigenfunctions on the axis.
double density_by_enumeration(int d, int M, double r) {
  const std::vector<double> on_axis = hermite_psi_table(M, r);
  const std::vector<double> at_zero = hermite_psi_table(M, 0.0);
  std::vector<int> levels(static_cast<std::size_t>(d), 0);
  double total = 0.0;
  bool done = false;
  while (!done) {
    int sum = 0;
    for (int v : levels) sum += v;
    if (sum <= M) {
      double product = on_axis[levels[0]] * on_axis[levels[0]];
      for (int j = 1; j < d; ++j) product *= at_zero[levels[j]] * at_zero[levels[j]];
      total += product;
    }
    int pos = 0;
    while (pos < d) {
      if (++levels[static_cast<std::size_t>(pos)] <= M) break;
      levels[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == d) done = true;
  }
  return total;
}

}  // namespace

TEST_CASE("eigenfunction values and normalization") {
  CHECK(hermite_psi(0, 0.0) == Catch::Approx(0.7511255444649425).epsilon(1e-14));
  CHECK(hermite_psi(1, 0.0) == 0.0);
  // psi_2(0) = -1 / (sqrt(2) pi^{1/4})
  CHECK(hermite_psi(2, 0.0) ==
        Catch::Approx(-0.7511255444649425 / std::sqrt(2.0)).epsilon(1e-14));

  for (int l : {0, 1, 5, 20, 41, 60}) {
    const double r_max = std::sqrt(2.0 * l + 1.0) + 8.0;
    const double norm = 2.0 * integrate(
                                  [&](double x) {
                                    const double p = hermite_psi(l, x);
                                    return p * p;
                                  },
                                  0.0, r_max, {1e-13, 1e-13});
    REQUIRE(std::abs(norm - 1.0) < 1e-10);
  }
}

TEST_CASE("eigenfunctions decay far outside the turning point") {
  for (int l : {0, 3, 10}) CHECK(std::abs(hermite_psi(l, std::sqrt(2.0 * l + 1.0) + 9.0)) < 1e-12);
}

TEST_CASE("basis cache derivatives satisfy the oscillator relations") {
  const HermiteBasisCache cache = HermiteBasisCache::at(12, 0.83);
  for (int l = 0; l <= 12; ++l) {
    const double expected =
        (l >= 1 ? std::sqrt(2.0 * l) * cache.psi[l - 1] : 0.0) - 0.83 * cache.psi[l];
    REQUIRE(cache.dpsi[l] == expected);
  }
  // finite-difference check of psi' for a few levels
  const double h = 1e-6;
  for (int l : {0, 4, 9}) {
    const double fd = (hermite_psi(l, 0.83 + h) - hermite_psi(l, 0.83 - h)) / (2.0 * h);
    REQUIRE(cache.dpsi[l] == Catch::Approx(fd).margin(1e-8));
  }
}

TEST_CASE("single-orbital density is the ground-state Gaussian") {
  const ShellSpec spec(1, 0);
  for (double r : {0.0, 0.4, 1.3, 2.7}) {
    const double expected = std::exp(-r * r) / std::sqrt(std::numbers::pi);
    CHECK(radial_density(spec, r) == Catch::Approx(expected).epsilon(1e-14));
    CHECK(density_via_generating_function(spec, r) == Catch::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("density at the origin for the first two-dimensional shell") {
  CHECK(radial_density(ShellSpec(2, 1), 0.0) ==
        Catch::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
  CHECK(density_via_generating_function(ShellSpec(2, 1), 0.0) ==
        Catch::Approx(1.0 / std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("convolution route equals brute-force enumeration") {
  for (int d = 1; d <= 3; ++d)
    for (int M = 0; M <= 6; ++M) {
      const ShellDensity density(ShellSpec(d, M));
      for (double r : {0.0, 0.31, 0.9, 1.7, 2.6}) {
        const double fast = density(r);
        const double slow = density_by_enumeration(d, M, r);
        REQUIRE(fast == Catch::Approx(slow).epsilon(1e-12));
      }
    }
}

TEST_CASE("generating-function route agrees with the shell sum") {
  for (int d = 1; d <= 3; ++d)
    for (int M : {0, 1, 4, 10}) {
      const ShellSpec spec(d, M);
      const ShellDensity density(spec);
      const double r_hi = std::sqrt(2.0 * spec.m_tilde_real()) + 4.0;
      for (int i = 0; i <= 24; ++i) {
        const double r = r_hi * i / 24.0;
        const double a = density(r);
        const double b = density_via_generating_function(spec, r);
        REQUIRE(std::abs(a - b) <= 1e-10 * std::max({std::abs(a), std::abs(b), 1e-300}));
      }
    }
}

TEST_CASE("density is nonnegative on a broad grid") {
  for (int d = 1; d <= 3; ++d) {
    const ShellSpec spec(d, 7);
    const RadialProfile profile =
        sample_radial_profile(spec, 0.0, std::sqrt(2.0 * spec.m_tilde_real()) + 4.0, 200);
    for (double v : profile.values) REQUIRE(v >= 0.0);
  }
}

TEST_CASE("sampled profile integrates to the particle number") {
  const ShellSpec spec(2, 5);
  const double r_hi = std::sqrt(2.0 * spec.m_tilde_real()) + 8.0;
  const RadialProfile profile = sample_radial_profile(spec, 0.0, r_hi, 4001);
  // trapezoid of omega_d r^{d-1} rho
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < profile.radii.size(); ++i) {
    const double r0 = profile.radii[i], r1 = profile.radii[i + 1];
    const double f0 = r0 * profile.values[i], f1 = r1 * profile.values[i + 1];
    mass += 0.5 * (f0 + f1) * (r1 - r0);
  }
  mass *= 2.0 * std::numbers::pi;  // omega_2
  CHECK(mass == Catch::Approx(spec.particle_number_real()).epsilon(1e-6));
}

TEST_CASE("two-dimensional density is spherically symmetric") {
  for (int M = 0; M <= 4; ++M) {
    const ShellDensity density(ShellSpec(2, M));
    const std::vector<std::pair<double, double>> points = {{0.3, 0.7}, {1.1, 0.4}, {0.9, 1.3}};
    for (const auto& [x, y] : points) {
      const std::vector<double> px = hermite_psi_table(M, x);
      const std::vector<double> py = hermite_psi_table(M, y);
      double direct = 0.0;
      for (int l1 = 0; l1 <= M; ++l1)
        for (int l2 = 0; l1 + l2 <= M; ++l2) direct += px[l1] * px[l1] * py[l2] * py[l2];
      REQUIRE(direct == Catch::Approx(density(std::hypot(x, y))).epsilon(1e-12));
    }
  }
}

TEST_CASE("analytic derivatives match finite differences") {
  // d = 1 single orbital: rho' = -2 r exp(-r^2)/sqrt(pi)
  const double r0 = 0.9;
  CHECK(density_derivatives(ShellSpec(1, 0), r0, 1) ==
        Catch::Approx(-2.0 * r0 * std::exp(-r0 * r0) / std::sqrt(std::numbers::pi)).epsilon(1e-13));

  {
    const ShellSpec spec(1, 2);
    const double r = 0.7, h = 1e-4;
    const double fd =
        (radial_density(spec, r + h) - radial_density(spec, r - h)) / (2.0 * h);
    CHECK(std::abs(density_derivatives(spec, r, 1) - fd) < 1e-6);
  }
  {
    const ShellSpec spec(2, 3);
    const double r = 1.1, h = 2e-3;
    const auto rho = [&](double x) { return radial_density(spec, x); };
    const double fd3 =
        (rho(r + 2 * h) - 2 * rho(r + h) + 2 * rho(r - h) - rho(r - 2 * h)) / (2 * h * h * h);
    CHECK(std::abs(density_derivatives(spec, r, 3) - fd3) < 1e-4);
  }
  CHECK_THROWS_AS(density_derivatives(ShellSpec(1, 1), 1.0, 4), std::domain_error);
  CHECK_THROWS_AS(density_derivatives(ShellSpec(1, 1), 0.0, 1), std::domain_error);
}

TEST_CASE("third order equation residual contracts") {
  CHECK(ode_residual(ShellSpec(1, 0), 1.0).relative() < 1e-12);
  CHECK(ode_residual(ShellSpec(2, 4), 0.9).relative() < 1e-8);
  CHECK(ode_residual(ShellSpec(3, 6), 2.5).relative() < 1e-8);
  for (int d = 1; d <= 3; ++d)
    for (int M = 0; M <= 8; ++M) {
      const ShellSpec spec(d, M);
      const double r_hi = std::sqrt(2.0 * spec.m_tilde_real()) + 2.0;
      for (int i = 0; i < 25; ++i) {
        const double r = 0.05 + (r_hi - 0.05) * (i + 0.5) / 25.0;
        REQUIRE(ode_residual(spec, r).relative() <= 1e-8);
      }
    }
}

TEST_CASE("integro-differential residual contracts") {
  // single orbital: the tail integral has the closed form exp(-r^2)/(2 sqrt(pi))
  {
    const double r = 1.0;
    const ShellDensity density{ShellSpec(1, 0)};
    const double tail = integrate([&](double s) { return s * density(s); }, r,
                                  density.integration_radius(), {1e-13, 1e-13});
    CHECK(tail ==
          Catch::Approx(std::exp(-r * r) / (2.0 * std::sqrt(std::numbers::pi))).epsilon(1e-11));
    CHECK(integro_residual(ShellSpec(1, 0), r).relative() < 1e-10);
  }
  CHECK(integro_residual(ShellSpec(2, 2), 0.5).relative() < 1e-6);
  CHECK(integro_residual(ShellSpec(1, 5), 3.0).relative() < 1e-6);
  for (int d = 1; d <= 3; ++d)
    for (int M : {0, 3, 8}) {
      const ShellSpec spec(d, M);
      const double r_hi = std::sqrt(2.0 * spec.m_tilde_real()) + 1.0;
      for (int i = 0; i < 25; ++i) {
        const double r = 0.1 + (r_hi - 0.1) * (i + 0.5) / 25.0;
        REQUIRE(integro_residual(spec, r).relative() <= 1e-6);
      }
    }
}

TEST_CASE("numeric moments against exact and continued values") {
  CHECK(numeric_moment(ShellSpec(1, 0), 1.0) == Catch::Approx(0.5).epsilon(1e-10));
  CHECK(numeric_moment(ShellSpec(2, 1), 0.0) == Catch::Approx(1.0).epsilon(1e-10));
  CHECK(numeric_moment(ShellSpec(1, 2), 0.75) ==
        Catch::Approx(moment_real_k(ShellSpec(1, 2), 0.75)).epsilon(1e-6));
  // negative non-integer order: the radial weight is singular at the origin
  CHECK(numeric_moment(ShellSpec(1, 1), -0.2) ==
        Catch::Approx(moment_real_k(ShellSpec(1, 1), -0.2)).epsilon(1e-6));
  CHECK(numeric_moment(ShellSpec(2, 2), -0.6) ==
        Catch::Approx(moment_real_k(ShellSpec(2, 2), -0.6)).epsilon(1e-6));
  CHECK_THROWS_AS(numeric_moment(ShellSpec(1, 1), -0.5), std::domain_error);
}

TEST_CASE("quadrature rejects unresolvable requests") {
  // discontinuous integrand with an absurd interval budget
  QuadratureOptions opt;
  opt.abs_tol = 1e-300;
  opt.rel_tol = 1e-300;
  opt.max_intervals = 8;
  CHECK_THROWS_AS(integrate([](double x) { return x < 0.123456 ? 0.0 : 1.0; }, 0.0, 1.0, opt),
                  QuadratureError);
}
