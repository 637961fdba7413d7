#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fermigas {

// Oscillator eigenfunction values psi_0..psi_max at x through the normalized
// three-term recurrence
//   psi_{l+1} = x sqrt(2/(l+1)) psi_l - sqrt(l/(l+1)) psi_{l-1}.
// Raw Hermite polynomials overflow around degree 150; the normalized form
// stays O(1) through the oscillatory region and decays beyond the turning
// point, so the upward recurrence tracks the dominant solution throughout.
inline std::vector<double> hermite_psi_table(int max_level, double x) {
  if (max_level < 0) throw std::domain_error("hermite_psi_table: level >= 0 required");
  std::vector<double> psi(static_cast<std::size_t>(max_level) + 1);
  constexpr double kInvPiQuarter = 0.7511255444649425;  // pi^{-1/4}
  psi[0] = kInvPiQuarter * std::exp(-0.5 * x * x);
  if (max_level >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int l = 1; l < max_level; ++l)
    psi[l + 1] = x * std::sqrt(2.0 / (l + 1)) * psi[l] -
                 std::sqrt(static_cast<double>(l) / (l + 1)) * psi[l - 1];
  return psi;
}

inline double hermite_psi(int l, double x) { return hermite_psi_table(l, x)[static_cast<std::size_t>(l)]; }

// Values and first derivatives of psi_0..psi_max at one point. Higher
// derivatives never need separate storage: the oscillator equation gives
// psi_l'' = (x^2 - 2l - 1) psi_l.
struct HermiteBasisCache {
  int max_level;
  double x;
  std::vector<double> psi;
  std::vector<double> dpsi;

  static HermiteBasisCache at(int max_level, double x) {
    HermiteBasisCache cache{max_level, x, hermite_psi_table(max_level, x), {}};
    cache.dpsi.resize(static_cast<std::size_t>(max_level) + 1);
    for (int l = 0; l <= max_level; ++l)
      cache.dpsi[l] = (l >= 1 ? std::sqrt(2.0 * l) * cache.psi[l - 1] : 0.0) - x * cache.psi[l];
    return cache;
  }
};

}  // namespace fermigas
