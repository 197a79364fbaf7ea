#pragma once

// Drude-damped particle and oscillator: closed-form specific heats built
// from trigamma functions, and a truncated Matsubara product for ln Z that
// serves as an independent check of the closed forms.
//
// Reference frequency: whichever frequency the caller measures gamma,
// omega_d and omega_0 in (omega_0 for the oscillator figure, omega_d for
// the free-particle figure).

#include <functional>
#include <vector>

#include "openheat/specfun.hpp"
#include "openheat/types.hpp"

namespace openheat::drude {

using specfun::Complex;

/// Laplace transform of the damping kernel, gamma * omega_d / (z + omega_d).
double kernel(const DrudeParams& params, double z);

/// True iff gamma_hat'(0) = -gamma / omega_d < -1, the condition under
/// which the free particle acquires a negative specific heat at low
/// temperature. Only defined for the free particle.
bool negativity_criterion(const DrudeParams& params);

/// Roots of x^3 + wd x^2 + (gamma wd + W^2) x + wd W^2 for the oscillator,
/// or the two roots of x^2 + wd x + gamma wd for the free particle (the
/// cubic's trivial root x = 0 is dropped). Sorted by (real, imag).
std::vector<Complex> characteristic_roots(const DrudeParams& params);

/// Closed-form specific heat of the damped oscillator:
///   1 + sum_i L_i^2 psi'(1 - L_i) - L_D^2 psi'(1 + L_D),
/// with L_i = lambda_i / (2 pi theta) and L_D = omega_d / (2 pi theta).
/// Only c_total is populated. Throws std::runtime_error if the result
/// picks up an imaginary part above 1e-9.
HeatCurvePoint specific_heat_osc_drude(const DrudeParams& params, double theta);

/// Free-particle analogue, 1/2 + sum over the two nonzero roots.
HeatCurvePoint specific_heat_free_drude(const DrudeParams& params, double theta);

/// Dispatches on params.is_free().
HeatCurvePoint specific_heat_drude(const DrudeParams& params, double theta);

struct MatsubaraConfig {
  int n_terms = 10000;
  /// 0: plain truncation after n_terms factors.
  /// 1: adds the integral of the remaining factors and the half end term.
  /// 2: additionally the B_2 and B_4 Euler-Maclaurin derivative terms.
  int tail_orders = 2;

  void validate() const;
};

/// ln Z up to a temperature-independent constant from the Matsubara
/// product
///   Z = (1 / beta W) prod_n nu_n^2 / (nu_n^2 + nu_n gamma_hat(nu_n) + W^2)
/// or, for the free particle, beta^{-1/2} prod_n nu_n / (nu_n + gamma_hat(nu_n)).
/// The product is evaluated directly from the kernel and never uses the
/// characteristic roots. Accumulated in extended precision.
long double log_partition_matsubara(const DrudeParams& params, long double beta,
                                    const MatsubaraConfig& cfg = {});
double log_partition_matsubara_theta(const DrudeParams& params, double theta,
                                     const MatsubaraConfig& cfg = {});

/// ln Z as a function of the inverse temperature beta.
using LogPartition = std::function<long double(long double beta)>;

/// beta^2 d^2 ln Z / d beta^2 by a central five-point difference in beta.
/// With beta_step <= 0 the step is max(1e-4 beta, 1e-6).
double specific_heat_numeric(const LogPartition& log_partition, double theta,
                             double beta_step = 0.0);

struct MatsubaraHeat {
  double c_total;
  /// |C(n_terms) - C(2 n_terms)|.
  double doubling_gap;
  /// doubling_gap < 1e-8.
  bool converged;
};

/// Specific heat from the Matsubara product, with the doubling test.
MatsubaraHeat specific_heat_matsubara(const DrudeParams& params, double theta,
                                      const MatsubaraConfig& cfg = {});

}  // namespace openheat::drude
