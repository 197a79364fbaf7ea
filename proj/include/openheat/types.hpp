#pragma once

// Parameter records and result types shared across the models.
//
// Units: hbar = k_B = 1. Frequencies and energies are measured in a
// caller-chosen reference frequency omega_ref, temperatures are the
// dimensionless theta = k_B T / (hbar omega_ref), and specific heats are
// returned in units of k_B.

#include <optional>

namespace openheat {

/// One bath oscillator (mass m, frequency omega) attached to a system mass M.
/// system_freq == 0 selects the free particle.
struct MinimalModelParams {
  double mass_ratio = 10.0;  ///< m / M
  double bath_freq = 1.0;    ///< omega
  double system_freq = 0.0;  ///< Omega

  [[nodiscard]] bool is_free() const { return system_freq == 0.0; }
  /// Throws std::invalid_argument unless m/M >= 0, omega > 0, Omega >= 0.
  void validate() const;
};

/// Drude kernel gamma_hat(z) = gamma * omega_d / (z + omega_d).
/// omega_0 == 0 selects the free particle.
struct DrudeParams {
  double gamma = 5.0;
  double omega_d = 0.1;
  double omega_0 = 1.0;

  [[nodiscard]] bool is_free() const { return omega_0 == 0.0; }
  /// Throws std::invalid_argument unless gamma > 0, omega_d > 0, omega_0 >= 0.
  void validate() const;
};

/// Specific heat C = C_{S+B} - C_B at one temperature. For the continuum
/// Drude models only the difference is known, so the two parts are empty.
struct HeatCurvePoint {
  double theta = 0.0;
  double c_total = 0.0;
  std::optional<double> c_coupled;
  std::optional<double> c_bath;

  /// Builds a point with c_total = c_coupled - c_bath.
  static HeatCurvePoint from_parts(double theta, double c_coupled, double c_bath) {
    return HeatCurvePoint{theta, c_coupled - c_bath, c_coupled, c_bath};
  }
  static HeatCurvePoint total_only(double theta, double c_total) {
    return HeatCurvePoint{theta, c_total, std::nullopt, std::nullopt};
  }
};

}  // namespace openheat
