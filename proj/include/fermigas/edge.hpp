#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fermigas/density.hpp"
#include "fermigas/quadrature.hpp"
#include "fermigas/residual.hpp"
#include "fermigas/shell.hpp"

namespace fermigas {

namespace detail {

struct AiryPair {
  double ai;
  double aip;
};

// Power series about zero, accumulated in long double. Alternation costs
// about |x|^{3/2} digits of cancellation near the switch point, which the
// 64-bit mantissa absorbs with room to spare for |x| <= 8.
inline AiryPair airy_maclaurin(double x_in) {
  constexpr long double kAi0 = 0.35502805388781723926006318600418317640L;
  constexpr long double kAip0 = -0.25881940379280679840518356018920396347L;
  const long double x = x_in;
  const long double x3 = x * x * x;

  long double f = 1.0L, tf = 1.0L;
  long double g = x, tg = x;
  for (int k = 0; k < 240; ++k) {
    tf *= x3 / ((3.0L * k + 2) * (3.0L * k + 3));
    tg *= x3 / ((3.0L * k + 3) * (3.0L * k + 4));
    f += tf;
    g += tg;
    if (fabsl(tf) + fabsl(tg) < 1e-25L * (fabsl(f) + fabsl(g) + 1.0L)) break;
  }
  long double fp = 0.5L * x * x, tfp = fp;
  for (int k = 1; k < 240; ++k) {
    tfp *= x3 / ((3.0L * k) * (3.0L * k + 2));
    fp += tfp;
    if (fabsl(tfp) < 1e-25L * (fabsl(fp) + 1.0L)) break;
  }
  long double gp = 1.0L, tgp = 1.0L;
  for (int k = 0; k < 240; ++k) {
    tgp *= x3 / ((3.0L * k + 1) * (3.0L * k + 3));
    gp += tgp;
    if (fabsl(tgp) < 1e-25L * (fabsl(gp) + 1.0L)) break;
  }
  return {static_cast<double>(kAi0 * f + kAip0 * g), static_cast<double>(kAi0 * fp + kAip0 * gp)};
}

// Coefficients of the large-argument expansions:
//   c_0 = 1,  c_{k+1} = c_k (3k+1/2)(3k+3/2)(3k+5/2) / (54 (k+1)(k+1/2)),
//   d_k = -c_k (6k+1)/(6k-1).
inline const std::array<long double, 48>& airy_asymptotic_c() {
  static const std::array<long double, 48> table = [] {
    std::array<long double, 48> c{};
    c[0] = 1.0L;
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
      c[k + 1] = c[k] * (3.0L * k + 0.5L) * (3.0L * k + 1.5L) * (3.0L * k + 2.5L) /
                 (54.0L * (k + 1.0L) * (k + 0.5L));
    return c;
  }();
  return table;
}

inline const std::array<long double, 48>& airy_asymptotic_d() {
  static const std::array<long double, 48> table = [] {
    std::array<long double, 48> d{};
    const auto& c = airy_asymptotic_c();
    for (std::size_t k = 0; k < d.size(); ++k)
      d[k] = -c[k] * (6.0L * k + 1.0L) / (6.0L * k - 1.0L);
    return d;
  }();
  return table;
}

inline AiryPair airy_asymptotic_positive(double x_in) {
  const long double x = x_in;
  const long double zeta = 2.0L * x * sqrtl(x) / 3.0L;
  const auto& c = airy_asymptotic_c();
  const auto& d = airy_asymptotic_d();

  long double s = 0.0L, sp = 0.0L;
  long double power = 1.0L;
  long double previous = 1e400L;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const long double term = c[k] * power;
    if (fabsl(term) > previous) break;  // past the smallest term
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    s += sign * term;
    sp += sign * d[k] * power;
    previous = fabsl(term);
    power /= zeta;
    if (fabsl(term) < 1e-22L) break;
  }
  const long double quarter_root = sqrtl(sqrtl(x));
  const long double envelope = expl(-zeta) / (2.0L * sqrtl(static_cast<long double>(std::numbers::pi)));
  return {static_cast<double>(envelope / quarter_root * s),
          static_cast<double>(-envelope * quarter_root * sp)};
}

inline AiryPair airy_asymptotic_negative(double x_in) {
  const long double z = -static_cast<long double>(x_in);
  const long double zeta = 2.0L * z * sqrtl(z) / 3.0L;
  const auto& c = airy_asymptotic_c();
  const auto& d = airy_asymptotic_d();

  long double s_even = 0.0L, s_odd = 0.0L, d_even = 0.0L, d_odd = 0.0L;
  long double power = 1.0L;  // zeta^{-2k}
  long double previous = 1e400L;
  for (std::size_t k = 0; 2 * k + 1 < c.size(); ++k) {
    const long double t_even = c[2 * k] * power;
    if (fabsl(t_even) > previous) break;
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    s_even += sign * t_even;
    s_odd += sign * c[2 * k + 1] * power / zeta;
    d_even += sign * d[2 * k] * power;
    d_odd += sign * d[2 * k + 1] * power / zeta;
    previous = fabsl(t_even);
    power /= zeta * zeta;
    if (fabsl(t_even) < 1e-22L) break;
  }
  const long double angle = zeta + static_cast<long double>(std::numbers::pi) / 4.0L;
  const long double sn = sinl(angle), cn = cosl(angle);
  const long double quarter_root = sqrtl(sqrtl(z));
  const long double inv_sqrt_pi = 1.0L / sqrtl(static_cast<long double>(std::numbers::pi));
  return {static_cast<double>(inv_sqrt_pi / quarter_root * (sn * s_even - cn * s_odd)),
          static_cast<double>(-inv_sqrt_pi * quarter_root * (cn * d_even + sn * d_odd))};
}

// Series/asymptotics switch point. At |x| = 8 the series still holds ~13
// accurate digits in long double while both expansions have bottomed out
// below 1e-12 relative.
inline constexpr double kAirySwitch = 8.0;

inline AiryPair airy_pair(double x) {
  if (std::abs(x) <= kAirySwitch) return airy_maclaurin(x);
  return x > 0 ? airy_asymptotic_positive(x) : airy_asymptotic_negative(x);
}

inline void airy_range_check(double x) {
  if (!(x >= -15.0 && x <= 20.0))
    throw std::domain_error("airy_ai: argument outside the supported range [-15, 20]");
}

}  // namespace detail

inline double airy_ai(double x) {
  detail::airy_range_check(x);
  return detail::airy_pair(x).ai;
}

inline double airy_ai_prime(double x) {
  detail::airy_range_check(x);
  return detail::airy_pair(x).aip;
}

namespace detail {

// Integral of u^{d/2} g(u) over the edge window. The fractional-power kink
// at u = 0 is removed by u = v^2 on [0, 1]; the upper limit caps the Airy
// argument at 16, past which the integrand is below 1e-18.
template <class G>
double edge_integral(int d, double s, G&& g, const QuadratureOptions& opt) {
  const double shift = std::cbrt(4.0);  // 2^{2/3}
  const double u_max = 16.0 - shift * s;
  if (u_max <= 0.0) return 0.0;
  const double u_break = std::min(1.0, u_max);
  double total = integrate(
      [&](double v) { return 2.0 * std::pow(v, d + 1) * g(v * v); }, 0.0, std::sqrt(u_break), opt);
  if (u_max > u_break)
    total += integrate([&](double u) { return std::pow(u, 0.5 * d) * g(u); }, u_break, u_max, opt);
  return total;
}

inline void edge_range_check(double s) {
  if (!(s >= -9.0 && s <= 10.0))
    throw std::domain_error("edge_profile: s outside the supported range [-9, 10]");
}

inline double edge_prefactor(int d) {
  return 1.0 / (std::tgamma(0.5 * d + 1.0) * std::pow(2.0, 4.0 / 3.0) *
                std::pow(std::numbers::pi, 0.5 * d));
}

}  // namespace detail

// Soft-edge profile F_d(s): the Airy-weighted integral that the scaled
// density approaches at the boundary of its support.
inline double edge_profile(int d, double s, QuadratureOptions opt = {}) {
  if (d < 1) throw std::domain_error("edge_profile: d >= 1 required");
  detail::edge_range_check(s);
  const double shift = std::cbrt(4.0);
  return detail::edge_prefactor(d) *
         detail::edge_integral(d, s, [&](double u) { return airy_ai(u + shift * s); }, opt);
}

// Residual of the limiting third order equation -(1/4)F''' + s F' - (d/2)F.
// All derivatives are taken under the integral sign with Ai' and Ai'' = x Ai;
// nothing is finite-differenced through the quadrature.
inline Residual edge_ode_residual(int d, double s, QuadratureOptions opt = {}) {
  if (d < 1) throw std::domain_error("edge_ode_residual: d >= 1 required");
  detail::edge_range_check(s);
  const double shift = std::cbrt(4.0);
  const double pref = detail::edge_prefactor(d);
  const double f = pref * detail::edge_integral(
                              d, s, [&](double u) { return airy_ai(u + shift * s); }, opt);
  const double f1 = pref * shift *
                    detail::edge_integral(
                        d, s, [&](double u) { return airy_ai_prime(u + shift * s); }, opt);
  // Each d/ds brings a factor 2^{2/3}; three of them give exactly 4.
  const double f3 = pref * 4.0 *
                    detail::edge_integral(
                        d, s,
                        [&](double u) {
                          const double t = u + shift * s;
                          return airy_ai(t) + t * airy_ai_prime(t);
                        },
                        opt);
  const double t1 = -0.25 * f3;
  const double t2 = s * f1;
  const double t3 = -0.5 * d * f;
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
  return {t1 + t2 + t3, scale};
}

struct EdgeConvergence {
  double finite_value;
  double limit_value;
  double gap;
};

// Finite-shell density in edge variables against the limiting profile.
inline EdgeConvergence edge_convergence(const ShellSpec& spec, double s,
                                        QuadratureOptions opt = {}) {
  if (spec.M < 4) throw std::domain_error("edge_convergence: M >= 4 required");
  const double mt = spec.m_tilde_real();
  const double r = std::sqrt(2.0 * mt) * (1.0 + s / (2.0 * std::pow(mt, 2.0 / 3.0)));
  const double finite = ShellDensity(spec)(r) / (std::sqrt(2.0) * std::pow(mt, 1.0 / 6.0));
  const double limit = edge_profile(spec.d, s, opt);
  return {finite, limit, std::abs(finite - limit)};
}

struct EdgeProfileSamples {
  int d;
  std::vector<double> s;
  std::vector<double> values;
  double quadrature_tolerance;
};

inline EdgeProfileSamples sample_edge_profile(int d, double s_min, double s_max, int samples,
                                              QuadratureOptions opt = {}) {
  if (samples < 2) throw std::invalid_argument("sample_edge_profile: need at least 2 samples");
  if (!(s_min < s_max)) throw std::invalid_argument("sample_edge_profile: need s_min < s_max");
  EdgeProfileSamples out{d, {}, {}, opt.abs_tol};
  for (int i = 0; i < samples; ++i) {
    const double s = s_min + (s_max - s_min) * i / (samples - 1.0);
    out.s.push_back(s);
    out.values.push_back(edge_profile(d, s, opt));
  }
  return out;
}

}  // namespace fermigas
