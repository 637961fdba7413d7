#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fermigas/laguerre.hpp"
#include "fermigas/moments.hpp"
#include "fermigas/rational.hpp"
#include "fermigas/residual.hpp"
#include "fermigas/shell.hpp"

namespace fermigas {

struct TransformValue {
  ShellSpec spec;
  double k;      // radial frequency
  double value;  // equals the particle number at k = 0
};

// Closed form of the density transform: exp(-k^2/4) L_M^{(d)}(k^2/2).
inline TransformValue rho_hat(const ShellSpec& spec, double k) {
  if (k < 0.0) throw std::domain_error("rho_hat: k >= 0 required");
  return {spec, k, std::exp(-0.25 * k * k) * laguerre(spec.M, spec.d, 0.5 * k * k)};
}

// Residual of the second order equation the transform satisfies,
//   f'' + (2d+1)/k f' + (-k^2/4 + d + 1 + 2M) f = 0,
// with derivatives taken through the Laguerre ladder dL_n^{(a)}/dx = -L_{n-1}^{(a+1)}.
inline Residual rho_hat_ode_residual(const ShellSpec& spec, double k) {
  if (k <= 0.0) throw std::domain_error("rho_hat_ode_residual: k > 0 required");
  const double x = 0.5 * k * k;
  const double envelope = std::exp(-0.25 * k * k);
  const double lag = laguerre(spec.M, spec.d, x);
  const double ladder1 = laguerre(spec.M - 1, spec.d + 1, x);
  const double ladder2 = laguerre(spec.M - 2, spec.d + 2, x);

  const double f = envelope * lag;
  const double combo = -0.5 * lag - ladder1;       // f' = envelope * k * combo
  const double combo_dx = 0.5 * ladder1 + ladder2;
  const double f1 = envelope * k * combo;
  const double f2 = envelope * (combo * (1.0 - 0.5 * k * k) + k * k * combo_dx);

  const double t1 = f2;
  const double t2 = (2.0 * spec.d + 1.0) / k * f1;
  const double t3 = (-0.25 * k * k + spec.d + 1.0 + 2.0 * spec.M) * f;
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
  return {t1 + t2 + t3, scale};
}

// Exact coefficient of k^{2p} in the transform: Cauchy product of the
// rational series of exp(-k^2/4) and of the Laguerre polynomial in k^2/2.
inline Rational transform_taylor_coefficient(const ShellSpec& spec, long long p) {
  if (p < 0) throw std::domain_error("transform_taylor_coefficient: p >= 0 required");
  Rational coeff = 0;
  const long long l_max = std::min<long long>(p, spec.M);
  for (long long l = 0; l <= l_max; ++l) {
    const Rational lag_l = make_rational(l % 2 == 0 ? 1 : -1, factorial(l)) *
                           binomial(spec.M + spec.d, spec.M - l) / pow2(l);
    const Rational exp_l = make_rational((p - l) % 2 == 0 ? 1 : -1,
                                         factorial(p - l)) / pow2(2 * (p - l));
    coeff += lag_l * exp_l;
  }
  return coeff;
}

// Moment recovered from the transform series: the third, fully independent
// route to the exact moments.
inline Rational moment_from_transform(const ShellSpec& spec, long long p) {
  return f_coefficient(p, spec.d) * Rational(factorial(2 * p)) *
         Rational(p % 2 == 0 ? 1 : -1) * transform_taylor_coefficient(spec, p) /
         Rational(spec.particle_number());
}

inline bool taylor_moment_check(const ShellSpec& spec, long long p_max) {
  for (long long p = 0; p <= p_max; ++p)
    if (moment_from_transform(spec, p) != moment_closed_form(spec, p)) return false;
  return true;
}

// Right side of the tail-transform identity. The generating function route
// carries an explicit factor t, which shifts the (d+1)-family index down:
//   -(1/k) d/dk rho_hat = exp(-k^2/4) [ L_M^{(d)}/2 + L_{M-1}^{(d+1)} ].
inline double tail_transform_rhs(const ShellSpec& spec, double k) {
  const double x = 0.5 * k * k;
  return std::exp(-0.25 * k * k) *
         (0.5 * laguerre(spec.M, spec.d, x) + laguerre(spec.M - 1, spec.d + 1, x));
}

// Left side computed through the same-parameter derivative identity
// x dL_n/dx = n L_n - (n+a) L_{n-1}, so that the residual genuinely crosses
// two Laguerre families instead of cancelling algebraically.
inline double tail_transform_lhs(const ShellSpec& spec, double k) {
  if (k <= 0.0) throw std::domain_error("tail_transform_lhs: k > 0 required");
  const double x = 0.5 * k * k;
  const double lag = laguerre(spec.M, spec.d, x);
  double dlag_dx = 0.0;
  if (spec.M >= 1)
    dlag_dx = (spec.M * lag - (spec.M + spec.d) * laguerre(spec.M - 1, spec.d, x)) / x;
  return std::exp(-0.25 * k * k) * (0.5 * lag - dlag_dx);
}

inline Residual tail_transform_residual(const ShellSpec& spec, double k) {
  if (k <= 0.0) throw std::domain_error("tail_transform_residual: k > 0 required");
  const double lhs = tail_transform_lhs(spec, k);
  const double rhs = tail_transform_rhs(spec, k);
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return {lhs - rhs, scale};
}

}  // namespace fermigas
