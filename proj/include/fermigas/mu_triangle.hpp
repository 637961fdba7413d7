#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "fermigas/exact_solve.hpp"
#include "fermigas/moments.hpp"
#include "fermigas/rational.hpp"
#include "fermigas/shell.hpp"

namespace fermigas {

// Triangular coefficient array of the moment expansion in the shifted shell
// parameter. Row k holds entries l = 0..floor(k/2); everything outside the
// triangle is zero and reported as such by at().
class MuTriangle {
 public:
  MuTriangle(int d, long long k_max) : d_(d), rows_(static_cast<std::size_t>(k_max) + 1) {
    if (d < 1) throw std::invalid_argument("MuTriangle: d >= 1 required");
    if (k_max < 0) throw std::invalid_argument("MuTriangle: k_max >= 0 required");
    for (long long k = 0; k <= k_max; ++k)
      rows_[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k / 2) + 1, Rational(0));
  }

  int dimension() const { return d_; }
  long long k_max() const { return static_cast<long long>(rows_.size()) - 1; }

  Rational at(long long k, long long l) const {
    if (k < 0 || l < 0 || k >= static_cast<long long>(rows_.size())) return 0;
    const auto& row = rows_[static_cast<std::size_t>(k)];
    if (l >= static_cast<long long>(row.size())) return 0;
    return row[static_cast<std::size_t>(l)];
  }

  Rational& entry(long long k, long long l) {
    return rows_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(l));
  }

 private:
  int d_;
  std::vector<std::vector<Rational>> rows_;
};

// Fills the triangle from the two-index recurrence
//   (k+d+1) mu_{k+1,l} = k (k+d/2)(k+d/2-1) mu_{k-1,l-1} + (2k+d) mu_{k,l}
// with mu_{0,0} = 1 and zero boundary outside 0 <= l <= floor(k/2).
inline MuTriangle build_mu_triangle(int d, long long k_max) {
  MuTriangle t(d, k_max);
  t.entry(0, 0) = 1;
  const Rational half_d = make_rational(d, 2);
  for (long long k = 0; k < k_max; ++k) {
    for (long long l = 0; l <= (k + 1) / 2; ++l) {
      Rational v = Rational(2 * k + d) * t.at(k, l);
      if (l >= 1)
        v += Rational(k) * (Rational(k) + half_d) * (Rational(k) + half_d - 1) * t.at(k - 1, l - 1);
      t.entry(k + 1, l) = v / Rational(k + d + 1);
    }
  }
  return t;
}

// Leading column in closed form: 2^k (d/2)_k / (d+1)_k.
inline Rational mu_l0_closed(int d, long long k) {
  if (k < 0) throw std::domain_error("mu_l0_closed: k >= 0 required");
  return pow2(k) * pochhammer_half(d, k) / pochhammer(Rational(d + 1), k);
}

// First correction column in closed form; vanishes for k < 2.
inline Rational mu_l1_closed(int d, long long k) {
  if (k < 0) throw std::domain_error("mu_l1_closed: k >= 0 required");
  return mu_l0_closed(d, k) * make_rational(k * (k - 1) * (2 * k + 3 * d - 1), 24);
}

// Ratio polynomial p_{k,l} with mu_{k,l} = mu_{k,0} p_{k,l}, built from the
// nested sum with base p_{k,0} = 1. Degree 3l in k.
inline Rational p_polynomial_value(int d, long long l, long long k) {
  if (l < 0 || k < 0) throw std::domain_error("p_polynomial_value: nonnegative indices required");
  if (l == 0) return 1;
  Rational sum = 0;
  for (long long s = 0; s + 2 <= k; ++s)
    sum += Rational((s + 1) * (s + 1 + d)) * p_polynomial_value(d, l - 1, s);
  return sum / 4;
}

// Independent recovery of row k of the triangle: evaluate the exact moments
// at the k+1 smallest shells and solve the Vandermonde system in the shifted
// shell parameter. A nonzero coefficient of the wrong parity contradicts the
// expansion's structure and throws.
inline std::vector<Rational> extract_mu_by_interpolation(int d, long long k) {
  if (k < 0) throw std::domain_error("extract_mu_by_interpolation: k >= 0 required");
  const long long n = k + 1;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  std::vector<Rational> b(static_cast<std::size_t>(n));
  for (long long j = 0; j < n; ++j) {
    const ShellSpec spec(d, static_cast<int>(j));
    const Rational node = spec.m_tilde();
    Rational power = 1;
    for (long long i = 0; i < n; ++i) {
      a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = power;
      power *= node;
    }
    b[static_cast<std::size_t>(j)] = moment_closed_form(spec, k);
  }
  const std::vector<Rational> coeff = solve_linear_exact(std::move(a), std::move(b));
  for (long long j = 0; j < n; ++j) {
    if ((k - j) % 2 != 0 && coeff[static_cast<std::size_t>(j)] != 0)
      throw std::logic_error("extract_mu_by_interpolation: parity violation in coefficients");
  }
  std::vector<Rational> row;
  for (long long l = 0; l <= k / 2; ++l) row.push_back(coeff[static_cast<std::size_t>(k - 2 * l)]);
  return row;
}

}  // namespace fermigas
