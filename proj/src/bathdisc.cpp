#include "openheat/bathdisc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "openheat/jacobi.hpp"
#include "openheat/specfun.hpp"

namespace openheat::bathdisc {

void BathSpec::validate() const {
  if (mode_freqs.empty() || mode_freqs.size() != mode_masses.size()) {
    throw std::invalid_argument("BathSpec: need N >= 1 modes with one mass each");
  }
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!std::all_of(mode_freqs.begin(), mode_freqs.end(), positive) ||
      !std::all_of(mode_masses.begin(), mode_masses.end(), positive) || !(system_freq >= 0.0)) {
    throw std::invalid_argument("BathSpec: frequencies and masses must be positive");
  }
}

BathSpec single_mode(const MinimalModelParams& params) {
  params.validate();
  return BathSpec{{params.bath_freq}, {params.mass_ratio}, params.system_freq};
}

BathSpec discretize_drude(const DrudeParams& params, int n_modes, double omega_max) {
  params.validate();
  if (n_modes < 1) {
    throw std::invalid_argument("discretize_drude: n_modes must be at least 1");
  }
  if (omega_max <= 0.0) omega_max = 100.0 * params.omega_d;

  BathSpec spec;
  spec.system_freq = params.omega_0;
  const double spacing = omega_max / n_modes;
  const double wd_sq = params.omega_d * params.omega_d;
  for (int i = 0; i < n_modes; ++i) {
    const double w = (i + 0.5) * spacing;
    // m_i w_i^2 = (2 / pi) J(w_i) / w_i * spacing
    const double stiffness = 2.0 / std::numbers::pi * params.gamma * wd_sq / (w * w + wd_sq) * spacing;
    spec.mode_freqs.push_back(w);
    spec.mode_masses.push_back(stiffness / (w * w));
  }
  return spec;
}

ModeSpectrum normal_modes(const BathSpec& spec) {
  spec.validate();
  // K = L^T L, one row of L per spring: row 0 = Omega e_0 and
  // row i = w_i (e_i - sqrt(m_i) e_0). The eigenvalues of K are those of the
  // Gram matrix of L's rows, which the one-sided solver takes directly.
  const std::size_t n = spec.mode_freqs.size();
  std::vector<std::vector<double>> rows(n + 1, std::vector<double>(n + 1, 0.0));
  rows[0][0] = spec.system_freq;
  for (std::size_t i = 0; i < n; ++i) {
    rows[i + 1][0] = -std::sqrt(spec.mode_masses[i]) * spec.mode_freqs[i];
    rows[i + 1][i + 1] = spec.mode_freqs[i];
  }
  auto eig = jacobi_gram_eigenvalues(std::move(rows)).eigenvalues;

  ModeSpectrum out;
  out.bare = spec.mode_freqs;
  std::sort(out.bare.begin(), out.bare.end());
  const double zero_cut = 1e-10 * std::max(std::abs(eig.front()), std::abs(eig.back()));
  const auto zeros = std::count_if(eig.begin(), eig.end(), [&](double v) { return v < zero_cut; });
  if (spec.is_free()) {
    if (zeros != 1) {
      throw std::runtime_error("normal_modes: free particle must have exactly one zero mode");
    }
    eig.erase(eig.begin());
  }
  for (double v : eig) out.coupled.push_back(std::sqrt(std::max(v, 0.0)));
  return out;
}

HeatCurvePoint specific_heat_difference(const ModeSpectrum& spectrum, double theta,
                                        bool free_particle) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("temperature theta must be positive and finite");
  }
  double coupled = free_particle ? 0.5 : 0.0;
  for (double w : spectrum.coupled) coupled += specfun::boson_heat(w / (2.0 * theta));
  double bath = 0.0;
  for (double w : spectrum.bare) bath += specfun::boson_heat(w / (2.0 * theta));
  return HeatCurvePoint::from_parts(theta, coupled, bath);
}

}  // namespace openheat::bathdisc
