#pragma once

namespace fermigas {

// Generalized Laguerre polynomial L_n^{(alpha)}(x) by the three-term
// recurrence in the degree. Degree below zero evaluates to zero; the
// transform identities rely on that boundary convention.
inline double laguerre(long long n, int alpha, double x) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (long long j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace fermigas
