#pragma once

// Closed-form specific heats of a system mass coupled to a single bath
// oscillator, for a free system (translationally invariant coupling) and
// for a harmonically bound one. Reference frequency: the bath frequency.

#include <utility>

#include "openheat/types.hpp"

namespace openheat::minimal {

/// Relative-motion frequency sqrt(1 + m/M) * omega of the free model.
double coupled_frequency_free(const MinimalModelParams& params);

/// 1/2 + g(omega_bar / 2 theta) - g(omega / 2 theta).
HeatCurvePoint specific_heat_free_minimal(const MinimalModelParams& params, double theta);

struct NormalModes {
  double omega_plus;
  double omega_minus;
};

/// Normal-mode frequencies of the bound model, omega_plus >= omega_minus.
/// omega_minus is taken from the product omega_plus * omega_minus = omega * Omega
/// so that it stays accurate when the two frequencies are far apart.
NormalModes normal_modes_osc(const MinimalModelParams& params);

/// g(omega_+ / 2 theta) + g(omega_- / 2 theta) - g(omega / 2 theta).
HeatCurvePoint specific_heat_osc_minimal(const MinimalModelParams& params, double theta);

/// Location and value of the minimum over theta of the free-model
/// specific heat. The search runs over log(theta) in [1e-3, 1e2] (units of
/// the bath frequency).
struct CurveMinimum {
  double theta;
  double c_total;
};
CurveMinimum free_minimum(double mass_ratio);

/// Mass ratio at which min_theta C of the free model changes sign.
/// Bisection on the mass ratio to an absolute tolerance of 1e-9.
double free_threshold_mass_ratio();

}  // namespace openheat::minimal
