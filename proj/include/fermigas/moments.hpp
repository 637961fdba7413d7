#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fermigas/rational.hpp"
#include "fermigas/residual.hpp"
#include "fermigas/shell.hpp"

namespace fermigas {

// Exact 2F1(-k, -m; c; z) as the terminating series. Both upper parameters
// are nonpositive integers, so the sum has min(k, m) + 1 terms.
inline Rational hypergeometric_2f1_terminating(long long k, long long m, const Rational& c,
                                               const Rational& z) {
  if (k < 0 || m < 0) throw std::domain_error("2F1: negative termination order");
  const long long terms = std::min(k, m);
  Rational sum = 0;
  Rational term = 1;
  for (long long j = 0; j <= terms; ++j) {
    sum += term;
    if (j == terms) break;
    const Rational cj = c + j;
    if (cj == 0) throw std::domain_error("2F1: lower parameter hits a nonpositive integer");
    term *= make_rational((-k + j) * (-m + j), j + 1) * z / cj;
  }
  return sum;
}

// Normalized 2k-th radial moment in closed form; exact for integer k >= 0.
inline Rational moment_closed_form(const ShellSpec& spec, long long k) {
  if (k < 0) throw std::domain_error("moment_closed_form: k >= 0 required");
  Rational sum = 0;
  for (long long l = 0; l <= k; ++l)
    sum += binomial(k, k - l) * binomial(spec.M + spec.d, spec.d + l) * pow2(l);
  return pochhammer_half(spec.d, k) * sum / Rational(spec.particle_number());
}

struct MomentTable {
  enum class Provenance { closed_form, recurrence };

  ShellSpec spec;
  std::vector<Rational> values;  // values[k] is the normalized 2k-th moment
  Provenance provenance;
};

// Moment table from the second order recurrence, starting at m_0 = 1. The
// k = 0 step has no m_{-2} contribution: its coefficient k (k + d/2 - 1)
// vanishes there, so the term is simply absent.
inline MomentTable moment_recurrence_table(const ShellSpec& spec, long long k_max) {
  if (k_max < 0) throw std::domain_error("moment_recurrence_table: k_max >= 0 required");
  MomentTable table{spec, {}, MomentTable::Provenance::recurrence};
  table.values.reserve(static_cast<std::size_t>(k_max) + 1);
  table.values.emplace_back(1);
  const Rational half_d = make_rational(spec.d, 2);
  for (long long k = 0; k < k_max; ++k) {
    Rational rhs = Rational(spec.two_m_tilde()) * table.values[k];
    if (k >= 1) rhs += Rational(k) * (Rational(k) + half_d - 1) * table.values[k - 1];
    table.values.push_back(rhs * make_rational(2 * k + spec.d, 2 * (k + spec.d + 1)));
  }
  return table;
}

inline MomentTable moment_closed_form_table(const ShellSpec& spec, long long k_max) {
  MomentTable table{spec, {}, MomentTable::Provenance::closed_form};
  for (long long k = 0; k <= k_max; ++k) table.values.push_back(moment_closed_form(spec, k));
  return table;
}

// Moment continued to real k > -d/2 through the terminating hypergeometric
// sum. The sum has M + 1 terms and is a polynomial in k, so no truncation is
// involved; the Gamma ratio is evaluated with log-Gamma. Evaluation inside
// the guard band around the pole at k = -d/2 is refused.
inline double moment_real_k(const ShellSpec& spec, double k, double pole_guard = 1e-6) {
  if (!(k > -0.5 * spec.d + pole_guard))
    throw std::domain_error("moment_real_k: k within the guard band of the pole at -d/2");
  double sum = 1.0;
  double term = 1.0;
  for (long long l = 0; l < spec.M; ++l) {
    term *= (-k + l) * static_cast<double>(-spec.M + l) * 2.0 /
            ((l + 1.0) * (spec.d + 1.0 + l));
    sum += term;
  }
  const double gamma_ratio = std::exp(std::lgamma(0.5 * spec.d + k) - std::lgamma(0.5 * spec.d));
  return gamma_ratio * sum;
}

// Meixner polynomial M_n(x; beta, c) through its terminating hypergeometric
// series at argument 1 - 1/c.
inline double meixner(long long n, double x, double beta, double c) {
  if (n < 0) throw std::domain_error("meixner: n >= 0 required");
  if (c == 0.0) throw std::domain_error("meixner: c must be nonzero");
  if (beta <= 0.0 && beta == std::floor(beta) && -beta <= static_cast<double>(n) - 1.0)
    throw std::domain_error("meixner: beta is a nonpositive integer reached by a Pochhammer factor");
  const double z = 1.0 - 1.0 / c;
  double sum = 1.0;
  double term = 1.0;
  for (long long j = 0; j < n; ++j) {
    term *= static_cast<double>(-n + j) * (-x + j) * z / ((j + 1.0) * (beta + j));
    sum += term;
  }
  return sum;
}

// Residual of the second order difference equation the Meixner polynomials
// satisfy in their argument. Valid for real x, which is what extends the
// moment recurrence off the integers.
inline Residual meixner_difference_residual(long long n, double x, double beta, double c) {
  const double t1 = c * (x + beta) * meixner(n, x + 1.0, beta, c);
  const double t2 = (n * (c - 1.0) + x + (x + beta) * c) * meixner(n, x, beta, c);
  const double t3 = x * meixner(n, x - 1.0, beta, c);
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
  return {t1 - t2 + t3, scale};
}

// Reflection between the moment order and the shell label:
// m_{2k}(M) / (d/2)_k = m_{2M}(k) / (d/2)_M, exactly.
inline bool reflection_check(int d, long long k, long long M) {
  const Rational lhs = moment_closed_form(ShellSpec(d, static_cast<int>(M)), k) / pochhammer_half(d, k);
  const Rational rhs = moment_closed_form(ShellSpec(d, static_cast<int>(k)), M) / pochhammer_half(d, M);
  return lhs == rhs;
}

// Angular factor linking Taylor coefficients of the transform to radial
// moments: 1/f_{p,d} = [Gamma(d/2)/Gamma(d/2+p)] (2p)!/(4^p p!).
inline Rational f_coefficient(long long p, int d) {
  if (p < 0) throw std::domain_error("f_coefficient: p >= 0 required");
  return pochhammer_half(d, p) * pow2(2 * p) * Rational(factorial(p)) / Rational(factorial(2 * p));
}

}  // namespace fermigas
