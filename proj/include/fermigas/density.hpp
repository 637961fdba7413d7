#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fermigas/hermite.hpp"
#include "fermigas/quadrature.hpp"
#include "fermigas/residual.hpp"
#include "fermigas/series.hpp"
#include "fermigas/shell.hpp"

namespace fermigas {

// Sampled radial function with its parameterization and scaling convention.
struct RadialProfile {
  enum class Scaling { raw, global, edge };

  ShellSpec spec;
  std::vector<double> radii;
  std::vector<double> values;
  Scaling scaling = Scaling::raw;
};

// On-axis evaluator for the shell-sum density. The density is spherically
// symmetric, so it is evaluated at (r, 0, ..., 0); the d - 1 transverse
// coordinates then contribute only through their zero-point values. With
// c_a = psi_a(0)^2, the (d-1)-fold self-convolution w(t) collects every way
// of spending a transverse excitation budget t, and
//   rho(r) = sum_a psi_a(r)^2 W(M - a),   W(T) = sum_{t <= T} w(t).
// That turns the O(M^d) composition sum into an O(M^2 d) setup plus O(M)
// work per point.
class ShellDensity {
 public:
  explicit ShellDensity(const ShellSpec& spec) : spec_(spec) {
    const std::size_t n = static_cast<std::size_t>(spec.M) + 1;
    const std::vector<double> base = hermite_psi_table(spec.M, 0.0);
    std::vector<double> zero_sq(n);
    for (std::size_t i = 0; i < n; ++i) zero_sq[i] = base[i] * base[i];

    std::vector<double> w(n, 0.0);
    w[0] = 1.0;
    for (int rep = 1; rep < spec.d; ++rep) {
      std::vector<double> next(n, 0.0);
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t a = 0; a <= t; ++a) next[t] += w[a] * zero_sq[t - a];
      w = std::move(next);
    }
    cum_weights_.resize(n);
    double run = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      run += w[t];
      cum_weights_[t] = run;
    }
  }

  const ShellSpec& spec() const { return spec_; }

  double operator()(double r) const {
    const std::vector<double> psi = hermite_psi_table(spec_.M, r);
    double sum = 0.0;
    for (int a = 0; a <= spec_.M; ++a)
      sum += psi[a] * psi[a] * cum_weights_[static_cast<std::size_t>(spec_.M - a)];
    return sum;
  }

  // Density value with its first three radial derivatives, all from the
  // psi recurrences; nothing here is finite-differenced.
  struct Jet {
    double value;
    double d1;
    double d2;
    double d3;
  };

  Jet derivatives(double r) const {
    const HermiteBasisCache cache = HermiteBasisCache::at(spec_.M, r);
    Jet out{0.0, 0.0, 0.0, 0.0};
    for (int a = 0; a <= spec_.M; ++a) {
      const double w = cum_weights_[static_cast<std::size_t>(spec_.M - a)];
      const double p = cache.psi[a];
      const double q = cache.dpsi[a];
      const double curvature = r * r - 2.0 * a - 1.0;  // psi'' = curvature * psi
      const double p2 = curvature * p;
      const double p3 = 2.0 * r * p + curvature * q;
      out.value += w * p * p;
      out.d1 += w * 2.0 * p * q;
      out.d2 += w * 2.0 * (q * q + p * p2);
      out.d3 += w * 2.0 * (3.0 * q * p2 + p * p3);
    }
    return out;
  }

  // Quadrature truncation radius: classical turning point plus a fixed
  // buffer over which every occupied orbital decays super-exponentially.
  double integration_radius() const { return std::sqrt(2.0 * spec_.m_tilde_real()) + 8.0; }

 private:
  ShellSpec spec_;
  std::vector<double> cum_weights_;
};

inline double radial_density(const ShellSpec& spec, double r) {
  if (r < 0.0) throw std::domain_error("radial_density: r >= 0 required");
  return ShellDensity(spec)(r);
}

// Independent density route: coefficient of t^M in
//   (1-t)^{-1} pi^{-d/2} (1-t^2)^{-d/2} exp(-r^2 (1-t)/(1+t)),
// extracted with truncated power-series arithmetic.
inline double density_via_generating_function(const ShellSpec& spec, double r) {
  if (r < 0.0) throw std::domain_error("density_via_generating_function: r >= 0 required");
  const std::size_t n = static_cast<std::size_t>(spec.M) + 1;

  std::vector<double> arg(n);
  arg[0] = -r * r;
  for (std::size_t j = 1; j < n; ++j) arg[j] = (j % 2 == 1 ? 2.0 : -2.0) * r * r;
  const std::vector<double> expo = series_exp(arg);

  std::vector<double> even(n, 0.0);
  even[0] = 1.0;
  double coeff = 1.0;
  for (std::size_t m = 1; 2 * m < n; ++m) {
    coeff *= (0.5 * spec.d + (m - 1)) / static_cast<double>(m);
    even[2 * m] = coeff;
  }

  std::vector<double> product = series_product(expo, even);
  series_geometric_multiply(product);
  return std::pow(std::numbers::pi, -0.5 * spec.d) * product[n - 1];
}

inline double density_derivatives(const ShellSpec& spec, double r, int order) {
  if (r <= 0.0) throw std::domain_error("density_derivatives: r > 0 required");
  if (order < 1 || order > 3) throw std::domain_error("density_derivatives: order in 1..3");
  const ShellDensity::Jet jet = ShellDensity(spec).derivatives(r);
  switch (order) {
    case 1: return jet.d1;
    case 2: return jet.d2;
    default: return jet.d3;
  }
}

// Residual of the third order equation satisfied by the density, together
// with the magnitude of its largest term.
inline Residual ode_residual(const ShellSpec& spec, double r) {
  if (r <= 0.0) throw std::domain_error("ode_residual: r > 0 required");
  const ShellDensity::Jet jet = ShellDensity(spec).derivatives(r);
  const double mt = spec.m_tilde_real();
  const double t1 = -jet.d3 / 8.0;
  const double t2 = -(spec.d - 1.0) / r * jet.d2 / 8.0;
  const double t3 = ((spec.d - 1.0) / (8.0 * r * r) + 0.5 * r * r - mt) * jet.d1;
  const double t4 = -0.5 * spec.d * r * jet.value;
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4), 1e-300});
  return {t1 + t2 + t3 + t4, scale};
}

// Residual of the integro-differential relation. The tail integral runs to
// the truncation radius by adaptive quadrature.
inline Residual integro_residual(const ShellSpec& spec, double r, QuadratureOptions opt = {}) {
  if (r <= 0.0) throw std::domain_error("integro_residual: r > 0 required");
  const ShellDensity density(spec);
  const ShellDensity::Jet jet = density.derivatives(r);
  const double r_max = density.integration_radius();
  const double tail =
      r >= r_max ? 0.0 : integrate([&](double s) { return s * density(s); }, r, r_max, opt);
  const double laplacian = jet.d2 + (spec.d - 1.0) / r * jet.d1;
  const double mt = spec.m_tilde_real();
  const double t1 = -laplacian / 8.0;
  const double t2 = 0.5 * r * r * jet.value;
  const double t3 = 0.5 * (spec.d + 2.0) * tail;
  const double t4 = -mt * jet.value;
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4), 1e-300});
  return {t1 + t2 + t3 + t4, scale};
}

// Normalized 2k-th radial moment by quadrature against the exact angular
// measure. Valid for real k > -d/2 (same pole guard as the analytic
// continuation). A radial weight r^p with p < 0 is regularized near the
// origin by the substitution r = v^m.
inline double numeric_moment(const ShellSpec& spec, double k, QuadratureOptions opt = {},
                             double pole_guard = 1e-6) {
  if (!(k > -0.5 * spec.d + pole_guard))
    throw std::domain_error("numeric_moment: k within the guard band of the pole at -d/2");
  const ShellDensity density(spec);
  const double p = 2.0 * k + spec.d - 1.0;
  const double r_max = density.integration_radius();

  double radial = 0.0;
  if (p >= 0.0) {
    radial = integrate([&](double r) { return std::pow(r, p) * density(r); }, 0.0, r_max, opt);
  } else {
    const int m = static_cast<int>(std::ceil(2.0 / (p + 1.0)));
    radial = integrate(
        [&](double v) {
          return m * std::pow(v, m * (p + 1.0) - 1.0) * density(std::pow(v, m));
        },
        0.0, 1.0, opt);
    radial += integrate([&](double r) { return std::pow(r, p) * density(r); }, 1.0, r_max, opt);
  }
  const double omega =
      2.0 * std::pow(std::numbers::pi, 0.5 * spec.d) / std::tgamma(0.5 * spec.d);
  return omega / spec.particle_number_real() * radial;
}

inline RadialProfile sample_radial_profile(const ShellSpec& spec, double r_min, double r_max,
                                           int samples) {
  if (samples < 2) throw std::invalid_argument("sample_radial_profile: need at least 2 samples");
  if (!(r_min >= 0.0 && r_max > r_min))
    throw std::invalid_argument("sample_radial_profile: need 0 <= r_min < r_max");
  RadialProfile profile{spec, {}, {}, RadialProfile::Scaling::raw};
  const ShellDensity density(spec);
  profile.radii.reserve(samples);
  profile.values.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double r = r_min + (r_max - r_min) * i / (samples - 1.0);
    profile.radii.push_back(r);
    profile.values.push_back(density(r));
  }
  return profile;
}

}  // namespace fermigas
