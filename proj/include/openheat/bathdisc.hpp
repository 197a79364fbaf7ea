#pragma once

// Finite baths of N oscillators attached to the system mass M = 1 through
// springs (f_i / 2)(q_i - Q)^2 with f_i = m_i omega_i^2, and the exact
// normal-mode specific heat difference of such a network.

#include <vector>

#include "openheat/types.hpp"

namespace openheat::bathdisc {

struct BathSpec {
  std::vector<double> mode_freqs;   ///< omega_i > 0
  std::vector<double> mode_masses;  ///< m_i > 0, in units of the system mass
  double system_freq = 0.0;         ///< Omega; 0 selects the free particle

  [[nodiscard]] bool is_free() const { return system_freq == 0.0; }
  /// Throws std::invalid_argument on empty or non-positive entries.
  void validate() const;
};

struct ModeSpectrum {
  std::vector<double> bare;     ///< uncoupled bath frequencies, ascending
  std::vector<double> coupled;  ///< coupled normal modes, ascending; zero mode removed
};

/// A single mode of mass m/M and frequency omega; the minimal models.
BathSpec single_mode(const MinimalModelParams& params);

/// Equally spaced modes omega_i = (i - 1/2) d, d = omega_max / n_modes,
/// with masses chosen so that sum_i m_i omega_i^2 z / (z^2 + omega_i^2)
/// is the midpoint-rule discretization of the Drude kernel
/// gamma omega_d / (z + omega_d), i.e. of the spectral density
/// J(w) = gamma w omega_d^2 / (w^2 + omega_d^2).
/// omega_max <= 0 selects the default 100 omega_d.
BathSpec discretize_drude(const DrudeParams& params, int n_modes, double omega_max = 0.0);

/// Squared normal-mode frequencies are the eigenvalues of the mass-weighted
/// stiffness matrix
///   K_00 = Omega^2 + sum_i m_i w_i^2,  K_0i = -sqrt(m_i) w_i^2,  K_ii = w_i^2,
/// found by one-sided Jacobi on the spring factor of K so that low modes
/// keep full relative accuracy.
/// For the free particle the translation mode (eigenvalue below 1e-10 of
/// the largest) is removed; exactly one such mode must be present.
ModeSpectrum normal_modes(const BathSpec& spec);

/// c_coupled = [1/2 if free_particle] + sum_coupled g(w / 2 theta),
/// c_bath = sum_bare g(w / 2 theta).
HeatCurvePoint specific_heat_difference(const ModeSpectrum& spectrum, double theta,
                                        bool free_particle);

}  // namespace openheat::bathdisc
