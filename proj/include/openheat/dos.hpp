#pragma once

// Effective density of states rho(E), defined through
//   Z(beta) = int_0^inf dE rho(E) exp(-beta E).
//
// Exact signed delta combs for the single-mode oscillator model, inverse
// square-root branches for the single-mode free particle, and a Bromwich
// inversion by FFT for the Drude-damped oscillator.

#include <span>
#include <vector>

#include "openheat/specfun.hpp"
#include "openheat/types.hpp"

namespace openheat::dos {

using specfun::Complex;

struct DeltaEntry {
  double energy;
  int weight;
};

/// Integer-weighted deltas sorted by energy; coincident energies (within
/// 1e-9) are merged and zero weights dropped.
struct DeltaComb {
  std::vector<DeltaEntry> entries;

  /// sum_k w_k exp(-beta E_k)
  [[nodiscard]] double laplace(double beta) const;
  /// Largest energy included by the enumeration; the comb is complete below it.
  double e_max = 0.0;
};

/// Expansion of Z = 2 sinh(beta w/2) / (4 sinh(beta w+/2) sinh(beta w-/2))
/// into exponentials: +1 at E(n+, n-) - w/2 and -1 at E(n+, n-) + w/2 for
/// every normal-mode level E(n+, n-) = w+(n+ + 1/2) + w-(n- + 1/2).
/// Entries above e_max are omitted.
DeltaComb delta_comb_osc_minimal(const MinimalModelParams& params, double e_max);

/// Branch points of the free single-mode model: sinh(beta w/2) / sinh(beta wbar/2)
/// expanded as +1 at wbar(n + 1/2) - w/2 and -1 at wbar(n + 1/2) + w/2.
DeltaComb free_minimal_branches(const MinimalModelParams& params, double e_max);

/// Sampled continuous density of states.
struct DosCurve {
  std::vector<double> energies;
  std::vector<double> values;
  double sigma = 0.0;          ///< Bromwich abscissa (0 for analytic results)
  double ground_energy = 0.0;  ///< energy of the removed weight-one delta
  double max_imag = 0.0;       ///< largest imaginary residue before taking the real part
  double window_gap = 0.0;     ///< max |rho_gauss - rho_cosine| / peak
  bool window_stable = true;   ///< window_gap < 2%
};

/// rho(E) = sum_n w_n (pi (E - E_n))^{-1/2} for E > E_n, the inverse Laplace
/// transform of beta^{-1/2} sinh(beta w/2) / sinh(beta wbar/2). The
/// model's overall prefactor (total mass, box length) is set to one.
DosCurve dos_free_minimal(const MinimalModelParams& params, std::span<const double> e_grid);

/// ln Z(beta) for complex beta with Re beta > 0:
///   Z = Gamma(1-L1) Gamma(1-L2) Gamma(1-L3) / (beta W Gamma(1+L_D)),
/// L_i = beta lambda_i / 2 pi, L_D = beta omega_d / 2 pi. The imaginary
/// part is only defined modulo 2 pi. Oscillator only.
Complex log_partition_complex(const DrudeParams& params, Complex beta);
Complex partition_complex(const DrudeParams& params, Complex beta);

/// E_0 = lim -d ln Z / d beta, from beta = 1000 / W and 2000 / W with the
/// leading 1/beta^2 correction extrapolated away.
double ground_state_energy(const DrudeParams& params);

enum class Window { Gaussian, Cosine };

struct BromwichConfig {
  double sigma = 0.5;
  double tau_max = 4000.0;
  int samples = 1 << 17;
  Window window = Window::Gaussian;

  [[nodiscard]] double tau_step() const { return 2.0 * tau_max / samples; }
  /// Energy spacing forced by the FFT, pi / tau_max.
  [[nodiscard]] double energy_step() const;
  void validate() const;
};

/// `count` energies starting at e_start with the FFT spacing.
std::vector<double> bromwich_grid(const BromwichConfig& cfg, double e_start, int count);

/// Continuous part of rho(E) for the Drude oscillator:
///   rho(E) = (1/2 pi) int dtau [Z(s + i tau) - exp(-(s + i tau) E0)] exp((s + i tau) E)
/// on a symmetric tau grid of `samples` points, tapered by cfg.window. The
/// grid must be uniform with spacing cfg.energy_step() and at most
/// `samples` long (std::invalid_argument otherwise). Both windows are always
/// evaluated; window_gap compares them.
DosCurve bromwich_dos(const DrudeParams& params, std::span<const double> e_grid,
                      const BromwichConfig& cfg = {});

}  // namespace openheat::dos
