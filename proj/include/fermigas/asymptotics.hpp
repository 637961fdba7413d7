#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fermigas/density.hpp"
#include "fermigas/mu_triangle.hpp"
#include "fermigas/rational.hpp"
#include "fermigas/residual.hpp"
#include "fermigas/shell.hpp"

namespace fermigas {

// Leading-order scaled density: a (1 - r^2/2)^{d/2} bump supported on the
// ball of radius sqrt(2), normalized to unit mass.
inline double tf_density(int d, double r) {
  if (d < 1) throw std::domain_error("tf_density: d >= 1 required");
  if (r < 0.0) throw std::domain_error("tf_density: r >= 0 required");
  if (r * r >= 2.0) return 0.0;
  const double norm = std::pow(2.0 * std::numbers::pi, -0.5 * d) * std::tgamma(d + 1.0) /
                      std::tgamma(0.5 * d + 1.0);
  return norm * std::pow(1.0 - 0.5 * r * r, 0.5 * d);
}

inline double tf_density_derivative(int d, double r) {
  if (r * r >= 2.0) return 0.0;
  const double norm = std::pow(2.0 * std::numbers::pi, -0.5 * d) * std::tgamma(d + 1.0) /
                      std::tgamma(0.5 * d + 1.0);
  return -norm * 0.5 * d * r * std::pow(1.0 - 0.5 * r * r, 0.5 * d - 1.0);
}

// First correction density at d = 1 on (0, sqrt(2)); its endpoint
// singularity is non-integrable, so moments exist only through the Gamma
// continuation below.
inline double correction_density_d1(double r) {
  if (!(r >= 0.0 && r * r < 2.0))
    throw std::domain_error("correction_density_d1: r must lie in [0, sqrt(2))");
  return 0.25 / std::numbers::pi * std::pow(2.0 - r * r, -2.5);
}

// Moments of the d = 1 correction through the Euler beta continuation,
//   (2^{k-2}/3) k (k-1) Gamma(k+1/2) / (sqrt(pi) Gamma(k+1)),
// valid for real k > -1/2; the k(k-1) factor carries the zeros at k = 0, 1.
inline double continued_moment_d1(double k, double pole_guard = 1e-9) {
  if (!(k > -0.5 + pole_guard))
    throw std::domain_error("continued_moment_d1: k within the guard band of the pole at -1/2");
  return std::pow(2.0, k - 2.0) / 3.0 * k * (k - 1.0) *
         std::exp(std::lgamma(k + 0.5) - std::lgamma(k + 1.0)) / std::sqrt(std::numbers::pi);
}

// Same continuation evaluated exactly at integer k: (2^{k-2}/3) (1/2)_k / (k-2)!.
inline Rational continued_moment_d1_exact(long long k) {
  if (k < 0) throw std::domain_error("continued_moment_d1_exact: k >= 0 required");
  if (k < 2) return 0;
  return pow2(k - 2) * pochhammer(make_rational(1, 2), k) / (3 * Rational(factorial(k - 2)));
}

// Density correction as a measure on [0, 2] in the variable x = r^2:
// a polynomial part plus weighted delta and delta' atoms at the endpoint.
// Atom integrals are closed-form, never numerical spikes.
struct AtomicMeasure1D {
  std::vector<Rational> polynomial;  // coefficients of x^j on [0, 2]
  Rational delta_weight;             // atom at x = 2
  Rational delta_prime_weight;       // derivative atom at x = 2

  // Integral of x^k against the measure. The delta' atom contributes
  // -(x^k)'(2) = -k 2^{k-1} per unit weight.
  Rational moment(long long k) const {
    if (k < 0) throw std::domain_error("AtomicMeasure1D::moment: k >= 0 required");
    Rational m = 0;
    for (std::size_t j = 0; j < polynomial.size(); ++j) {
      const long long e = k + static_cast<long long>(j) + 1;
      m += polynomial[j] * pow2(e) / Rational(e);
    }
    m += delta_weight * pow2(k);
    if (k >= 1) m -= delta_prime_weight * Rational(k) * pow2(k - 1);
    return m;
  }

  double polynomial_value(double x) const {
    double value = 0.0;
    for (std::size_t j = polynomial.size(); j-- > 0;) value = value * x + to_double(polynomial[j]);
    return value;
  }
};

// First correction at d = 2: (1/4)(1 - x/2) on [0, 2] with atoms -1/4 delta
// and -1/3 delta' at x = 2.
inline AtomicMeasure1D correction_measure_d2() {
  return {{make_rational(1, 4), make_rational(-1, 8)}, make_rational(-1, 4), make_rational(-1, 3)};
}

// Large-argument expansion of a closed-form Stieltjes transform; the
// coefficient of index k pairs with the triangle entry mu_{k,l}.
struct StieltjesSeries {
  int d;
  int l;
  std::vector<Rational> coefficients;
};

namespace detail {

// Coefficients of (1 - u)^{alpha} through order n, exact.
inline std::vector<Rational> binomial_series_one_minus(const Rational& alpha, long long n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (long long j = 0; j < n; ++j)
    c[static_cast<std::size_t>(j) + 1] =
        -c[static_cast<std::size_t>(j)] * (alpha - j) / Rational(j + 1);
  return c;
}

// Coefficient of x^{-j} in log(1 - 2/x): -2^j / j for j >= 1.
inline Rational log_series_coefficient(long long j) { return -pow2(j) / Rational(j); }

}  // namespace detail

// Expands the printed closed forms in inverse powers and reads off the
// moment-expansion coefficients. Supported pairs: (d, l) in
// {(1,0), (1,1), (2,0), (2,1)}. With check_against_triangle set, a mismatch
// with the recurrence-built triangle throws.
inline StieltjesSeries stieltjes_series(int d, int l, int n_terms,
                                        bool check_against_triangle = true) {
  if (n_terms < 1) throw std::invalid_argument("stieltjes_series: n_terms >= 1 required");
  StieltjesSeries out{d, l, {}};
  out.coefficients.reserve(static_cast<std::size_t>(n_terms));

  if (d == 1 && l == 0) {
    // z - sqrt(z^2 - 2) = z (1 - (1 - 2u)^{1/2}), u = z^{-2}
    const auto root = detail::binomial_series_one_minus(make_rational(1, 2), n_terms + 1);
    for (long long k = 0; k < n_terms; ++k)
      out.coefficients.push_back(-root[static_cast<std::size_t>(k) + 1] * pow2(k + 1));
  } else if (d == 1 && l == 1) {
    // (1/4)(z^2 - 2)^{-5/2} = (1/4) z^{-5} (1 - 2u)^{-5/2}
    const auto root = detail::binomial_series_one_minus(make_rational(-5, 2), n_terms);
    for (long long k = 0; k < n_terms; ++k) {
      if (k < 2)
        out.coefficients.emplace_back(0);
      else
        out.coefficients.push_back(root[static_cast<std::size_t>(k) - 2] * pow2(k - 2) / 4);
    }
  } else if (d == 2 && l == 0) {
    // -log(1 - 2/x) + (x/2) log(1 - 2/x) + 1
    for (long long k = 0; k < n_terms; ++k)
      out.coefficients.push_back(-detail::log_series_coefficient(k + 1) +
                                 detail::log_series_coefficient(k + 2) / 2);
  } else if (d == 2 && l == 1) {
    // -(1/12) [ 3 log(1-2/x) - (3x/2) log(1-2/x) + 3/(x-2) - 4/(x-2)^2 - 3 ]
    for (long long k = 0; k < n_terms; ++k) {
      const long long j = k + 1;
      Rational c = 3 * detail::log_series_coefficient(j);
      c -= make_rational(3, 2) * detail::log_series_coefficient(j + 1);
      c += 3 * pow2(j - 1);                      // 1/(x-2) expands as 2^{j-1} x^{-j}
      if (j >= 2) c -= 4 * Rational(j - 1) * pow2(j - 2);  // 1/(x-2)^2 as (j-1) 2^{j-2} x^{-j}
      out.coefficients.push_back(-c / 12);
    }
  } else {
    throw std::invalid_argument("stieltjes_series: supported (d, l) are (1,0), (1,1), (2,0), (2,1)");
  }

  if (check_against_triangle) {
    const MuTriangle triangle = build_mu_triangle(d, n_terms - 1);
    for (long long k = 0; k < n_terms; ++k)
      if (out.coefficients[static_cast<std::size_t>(k)] != triangle.at(k, l))
        throw std::logic_error("stieltjes_series: expansion disagrees with the recurrence triangle");
  }
  return out;
}

enum class OperatorCheck { B_on_rho0, A_on_rho0_d2, coupled_l1_d2 };

// Applies the first-order operator B (and, where stated, the third-order
// operator A) to the closed-form limit profiles and reports the worst scaled
// residual over a fixed grid inside (0.05, sqrt(2) - 0.05). These profiles
// are annihilated analytically, so anything beyond roundoff is a bug.
inline double operator_AB_check(int d, OperatorCheck which) {
  if (d < 1) throw std::domain_error("operator_AB_check: d >= 1 required");
  if (which != OperatorCheck::B_on_rho0 && d != 2)
    throw std::invalid_argument("operator_AB_check: this check is specific to d = 2");

  const double r_lo = 0.05;
  const double r_hi = std::sqrt(2.0) - 0.05;
  const int samples = 25;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * (i + 0.5) / samples;
    if (which == OperatorCheck::B_on_rho0) {
      const double t1 = (0.5 * r * r - 1.0) * tf_density_derivative(d, r);
      const double t2 = -0.5 * d * r * tf_density(d, r);
      const double scale = std::max({std::abs(t1), std::abs(t2), 1e-300});
      worst = std::max(worst, std::abs(t1 + t2) / scale);
    } else {
      // Both d = 2 profiles are proportional to 1 - r^2/2; the constant in
      // front cancels from the scaled residual, so use the plain polynomial.
      const double value = 1.0 - 0.5 * r * r;
      const double d1 = -r;
      const double d2v = -1.0;
      const double d3v = 0.0;
      if (which == OperatorCheck::A_on_rho0_d2) {
        const double t1 = d3v / 8.0;
        const double t2 = (1.0 / r) * d2v / 8.0;
        const double t3 = -(1.0 / (r * r)) * d1 / 8.0;
        const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
        worst = std::max(worst, std::abs(t1 + t2 + t3) / scale);
      } else {
        const double b1 = (0.5 * r * r - 1.0) * d1;
        const double b2 = -1.0 * r * value;  // d/2 = 1
        const double b_scale = std::max({std::abs(b1), std::abs(b2), 1e-300});
        const double a1 = d3v / 8.0;
        const double a2 = (1.0 / r) * d2v / 8.0;
        const double a3 = -(1.0 / (r * r)) * d1 / 8.0;
        const double a_scale = std::max({std::abs(a2), std::abs(a3), 1e-300});
        worst = std::max(worst, std::abs(b1 + b2) / b_scale);
        worst = std::max(worst, std::abs(a1 + a2 + a3) / a_scale);
      }
    }
  }
  return worst;
}

// Scaled form of the density equation: with g(r) = rho(mt^{1/2} r),
// B g - mt^{-2} A g vanishes identically. Derivatives come from the shell
// sum through the chain rule.
inline Residual scaled_ode_check(const ShellSpec& spec, double r) {
  if (r <= 0.0) throw std::domain_error("scaled_ode_check: r > 0 required");
  const double mt = spec.m_tilde_real();
  const double root = std::sqrt(mt);
  const ShellDensity::Jet jet = ShellDensity(spec).derivatives(root * r);
  const double g1 = root * jet.d1;
  const double g2 = mt * jet.d2;
  const double g3 = mt * root * jet.d3;

  const double b1 = (0.5 * r * r - 1.0) * g1;
  const double b2 = -0.5 * spec.d * r * jet.value;
  const double a1 = g3 / 8.0 / (mt * mt);
  const double a2 = (spec.d - 1.0) / r * g2 / 8.0 / (mt * mt);
  const double a3 = -(spec.d - 1.0) / (r * r) * g1 / 8.0 / (mt * mt);
  const double scale =
      std::max({std::abs(b1), std::abs(b2), std::abs(a1), std::abs(a2), std::abs(a3), 1e-300});
  return {b1 + b2 - (a1 + a2 + a3), scale};
}

}  // namespace fermigas
