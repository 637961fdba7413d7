#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fermigas {

// Dense truncated power-series helpers. A series is its coefficient list
// c[0..n]; all operations truncate at the shorter input.

inline std::vector<double> series_product(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) out[i] += a[j] * b[i - j];
  return out;
}

// exp of a series; the constant term may be nonzero. Uses the derivative
// recurrence n e_n = sum_j j a_j e_{n-j}.
inline std::vector<double> series_exp(const std::vector<double>& a) {
  if (a.empty()) return {};
  std::vector<double> e(a.size());
  e[0] = std::exp(a[0]);
  for (std::size_t n = 1; n < a.size(); ++n) {
    double s = 0.0;
    for (std::size_t j = 1; j <= n; ++j) s += static_cast<double>(j) * a[j] * e[n - j];
    e[n] = s / static_cast<double>(n);
  }
  return e;
}

// Coefficients of (1 - u)^{-alpha} through order n.
inline std::vector<double> series_binomial_negative(double alpha, std::size_t n) {
  std::vector<double> c(n + 1);
  c[0] = 1.0;
  for (std::size_t j = 0; j < n; ++j) c[j + 1] = c[j] * (alpha + j) / (j + 1.0);
  return c;
}

// In-place multiplication by 1/(1 - t): running prefix sums.
inline void series_geometric_multiply(std::vector<double>& a) {
  for (std::size_t i = 1; i < a.size(); ++i) a[i] += a[i - 1];
}

}  // namespace fermigas
