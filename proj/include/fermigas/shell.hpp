#pragma once

#include <stdexcept>

#include "fermigas/rational.hpp"

namespace fermigas {

// The (d, M) parameterization of a completely filled oscillator shell:
// dimension d >= 1 and shell label M >= 0. Everything downstream is keyed on
// this pair.
struct ShellSpec {
  int d;
  int M;

  ShellSpec(int dim, int shell) : d(dim), M(shell) {
    if (d < 1) throw std::invalid_argument("ShellSpec: dimension must be >= 1");
    if (M < 0) throw std::invalid_argument("ShellSpec: shell label must be >= 0");
  }

  // Number of occupied orbitals: C(M + d, d).
  Integer particle_number() const { return binomial_integer(M + d, d); }
  double particle_number_real() const { return particle_number().template convert_to<double>(); }

  // Twice the shifted shell parameter, 2M + d + 1. Stored as an integer so
  // parity statements about polynomials in the shifted parameter stay exact.
  int two_m_tilde() const { return 2 * M + d + 1; }
  Rational m_tilde() const { return make_rational(two_m_tilde(), 2); }
  double m_tilde_real() const { return 0.5 * two_m_tilde(); }
};

inline Integer particle_number(const ShellSpec& spec) { return spec.particle_number(); }
inline Rational m_tilde(const ShellSpec& spec) { return spec.m_tilde(); }

}  // namespace fermigas
