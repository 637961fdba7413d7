#pragma once

#include <utility>
#include <vector>

#include "fermigas/rational.hpp"

namespace fermigas {

// Exact solve of a dense square system by fraction-free (Bareiss)
// elimination. Rows are scaled to a common integer denominator first; every
// division inside the elimination is then exact, which keeps intermediate
// entries at determinant size instead of blowing up through gcd churn.
inline std::vector<Rational> solve_linear_exact(std::vector<std::vector<Rational>> a,
                                                std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  if (b.size() != n) throw std::invalid_argument("solve_linear_exact: size mismatch");

  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve_linear_exact: ragged matrix");
    Integer scale = 1;
    for (std::size_t j = 0; j < n; ++j) scale = boost::multiprecision::lcm(scale, denominator(a[i][j]));
    scale = boost::multiprecision::lcm(scale, denominator(b[i]));
    for (std::size_t j = 0; j < n; ++j) m[i][j] = numerator(a[i][j]) * (scale / denominator(a[i][j]));
    m[i][n] = numerator(b[i]) * (scale / denominator(b[i]));
  }

  Integer prev = 1;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("solve_linear_exact: singular matrix");
    if (pivot != col) std::swap(m[pivot], m[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      for (std::size_t c = col + 1; c <= n; ++c)
        m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[col][col];
  }
  if (m[n - 1][n - 1] == 0) throw std::domain_error("solve_linear_exact: singular matrix");

  std::vector<Rational> x(n);
  for (std::size_t ri = n; ri-- > 0;) {
    Rational s(m[ri][n]);
    for (std::size_t c = ri + 1; c < n; ++c) s -= Rational(m[ri][c]) * x[c];
    x[ri] = s / Rational(m[ri][ri]);
  }
  return x;
}

}  // namespace fermigas
