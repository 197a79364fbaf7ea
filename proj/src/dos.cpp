#include "openheat/dos.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "openheat/drude.hpp"
#include "openheat/minimal.hpp"

namespace openheat::dos {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMergeTolerance = 1e-9;

DeltaComb merged(std::vector<DeltaEntry> raw, double e_max) {
  std::sort(raw.begin(), raw.end(),
            [](const DeltaEntry& a, const DeltaEntry& b) { return a.energy < b.energy; });
  DeltaComb comb;
  comb.e_max = e_max;
  for (std::size_t i = 0; i < raw.size();) {
    const double anchor = raw[i].energy;
    int weight = 0;
    std::size_t j = i;
    for (; j < raw.size() && raw[j].energy - anchor <= kMergeTolerance; ++j) weight += raw[j].weight;
    if (weight != 0) comb.entries.push_back({anchor, weight});
    i = j;
  }
  return comb;
}

void require_positive(double e_max, const char* what) {
  if (!(e_max > 0.0) || !std::isfinite(e_max)) throw std::invalid_argument(what);
}

double window_value(Window window, double tau, double tau_max) {
  switch (window) {
    case Window::Gaussian: {
      // half width at half maximum 0.8 tau_max
      const double x = tau / (0.8 * tau_max);
      return std::exp(-std::numbers::ln2 * x * x);
    }
    case Window::Cosine: {
      const double c = std::cos(0.5 * kPi * tau / tau_max);
      return c * c;
    }
  }
  return 0.0;
}

// FFTW planning is not reentrant.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

// Backward (e^{+2 pi i k j / n}) transform.
std::vector<Complex> inverse_dft(const std::vector<Complex>& input) {
  const int n = static_cast<int>(input.size());
  FftwBuffer in(fftw_alloc_complex(n));
  FftwBuffer out(fftw_alloc_complex(n));
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(n, in.get(), out.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (int k = 0; k < n; ++k) {
    in[k][0] = input[k].real();
    in[k][1] = input[k].imag();
  }
  fftw_execute(plan);
  std::vector<Complex> result(n);
  for (int k = 0; k < n; ++k) result[k] = {out[k][0], out[k][1]};
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return result;
}

struct Inversion {
  std::vector<double> values;
  double max_imag;
};

// values[j] = e^{s E_j} / 2pi * sum_k dtau W(tau_k) F(tau_k) e^{i tau_k E_j}
// with tau_k = (k - n/2) dtau and E_j = e_start + j * pi / tau_max.
Inversion invert(const std::vector<Complex>& f_nonneg, const BromwichConfig& cfg, Window window,
                 double e_start, std::size_t count) {
  const int n = cfg.samples;
  const int half = n / 2;
  const double dtau = cfg.tau_step();
  std::vector<Complex> a(n, Complex{0.0, 0.0});
  // k = 0 sits at tau = -tau_max and has no mirror partner; leave it at zero.
  for (int k = 1; k < n; ++k) {
    const int m = k - half;
    const double tau = m * dtau;
    const Complex f = m >= 0 ? f_nonneg[m] : std::conj(f_nonneg[-m]);
    a[k] = window_value(window, tau, cfg.tau_max) * f * std::polar(1.0, tau * e_start);
  }
  const auto transformed = inverse_dft(a);
  Inversion out;
  out.values.resize(count);
  out.max_imag = 0.0;
  const double de = cfg.energy_step();
  for (std::size_t j = 0; j < count; ++j) {
    const double e = e_start + static_cast<double>(j) * de;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const Complex v = sign * std::exp(cfg.sigma * e) * dtau / (2.0 * kPi) * transformed[j];
    out.values[j] = v.real();
    out.max_imag = std::max(out.max_imag, std::abs(v.imag()));
  }
  return out;
}

}  // namespace

double DeltaComb::laplace(double beta) const {
  double sum = 0.0;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    sum += it->weight * std::exp(-beta * it->energy);
  }
  return sum;
}

DeltaComb delta_comb_osc_minimal(const MinimalModelParams& params, double e_max) {
  require_positive(e_max, "delta_comb_osc_minimal: e_max must be positive");
  const auto modes = minimal::normal_modes_osc(params);
  const double w = params.bath_freq;
  const double zero_point = 0.5 * (modes.omega_plus + modes.omega_minus);
  if (e_max < zero_point) {
    throw std::invalid_argument("delta_comb_osc_minimal: e_max below the zero-point energy");
  }
  std::vector<DeltaEntry> raw;
  for (long np = 0;; ++np) {
    const double e_plus = zero_point + np * modes.omega_plus;
    if (e_plus - 0.5 * w > e_max) break;
    for (long nm = 0;; ++nm) {
      const double level = e_plus + nm * modes.omega_minus;
      if (level - 0.5 * w > e_max) break;
      raw.push_back({level - 0.5 * w, +1});
      if (level + 0.5 * w <= e_max) raw.push_back({level + 0.5 * w, -1});
    }
  }
  return merged(std::move(raw), e_max);
}

DeltaComb free_minimal_branches(const MinimalModelParams& params, double e_max) {
  require_positive(e_max, "free_minimal_branches: e_max must be positive");
  const double w_bar = minimal::coupled_frequency_free(params);
  const double w = params.bath_freq;
  std::vector<DeltaEntry> raw;
  for (long n = 0;; ++n) {
    const double level = w_bar * (n + 0.5);
    if (level - 0.5 * w > e_max) break;
    raw.push_back({level - 0.5 * w, +1});
    if (level + 0.5 * w <= e_max) raw.push_back({level + 0.5 * w, -1});
  }
  return merged(std::move(raw), e_max);
}

DosCurve dos_free_minimal(const MinimalModelParams& params, std::span<const double> e_grid) {
  DosCurve curve;
  if (e_grid.empty()) return curve;
  const double top = *std::max_element(e_grid.begin(), e_grid.end());
  const auto branches = free_minimal_branches(params, std::max(top, 1e-300));
  curve.energies.assign(e_grid.begin(), e_grid.end());
  curve.values.reserve(e_grid.size());
  for (double e : e_grid) {
    double rho = 0.0;
    for (const auto& b : branches.entries) {
      if (e > b.energy) rho += b.weight / std::sqrt(kPi * (e - b.energy));
    }
    curve.values.push_back(rho);
  }
  return curve;
}

namespace {

Complex log_partition_from_roots(const DrudeParams& params, std::span<const Complex> roots,
                                 Complex beta) {
  if (beta.imag() < 0.0) return std::conj(log_partition_from_roots(params, roots, std::conj(beta)));
  const Complex scale = beta / (2.0 * kPi);
  Complex sum = -std::log(beta * params.omega_0);
  for (const Complex& lambda : roots) sum += specfun::log_gamma(1.0 - scale * lambda);
  sum -= specfun::log_gamma(1.0 + scale * params.omega_d);
  return sum;
}

}  // namespace

Complex log_partition_complex(const DrudeParams& params, Complex beta) {
  params.validate();
  if (params.is_free()) {
    throw std::invalid_argument("log_partition_complex: oscillator only (omega_0 > 0)");
  }
  if (!(beta.real() > 0.0)) {
    throw std::invalid_argument("log_partition_complex: Re beta must be positive");
  }
  return log_partition_from_roots(params, drude::characteristic_roots(params), beta);
}

Complex partition_complex(const DrudeParams& params, Complex beta) {
  return std::exp(log_partition_complex(params, beta));
}

double ground_state_energy(const DrudeParams& params) {
  auto log_z = [&](double beta) { return log_partition_complex(params, Complex{beta, 0.0}).real(); };
  auto energy = [&](double beta) {
    const double h = 1e-3 * beta;
    return -(-log_z(beta + 2 * h) + 8 * log_z(beta + h) - 8 * log_z(beta - h) + log_z(beta - 2 * h)) /
           (12 * h);
  };
  const double beta = 1e3 / params.omega_0;
  // E(beta) = E0 + a / beta^2 + ...
  return (4.0 * energy(2.0 * beta) - energy(beta)) / 3.0;
}

double BromwichConfig::energy_step() const { return kPi / tau_max; }

void BromwichConfig::validate() const {
  const bool power_of_two = samples >= 2 && (samples & (samples - 1)) == 0;
  if (!(sigma > 0.0) || !(tau_max > 0.0) || !power_of_two) {
    throw std::invalid_argument("BromwichConfig: need sigma > 0, tau_max > 0, samples a power of two");
  }
}

std::vector<double> bromwich_grid(const BromwichConfig& cfg, double e_start, int count) {
  cfg.validate();
  if (count < 1 || count > cfg.samples) {
    throw std::invalid_argument("bromwich_grid: count must be in [1, samples]");
  }
  std::vector<double> grid(count);
  for (int j = 0; j < count; ++j) grid[j] = e_start + j * cfg.energy_step();
  return grid;
}

DosCurve bromwich_dos(const DrudeParams& params, std::span<const double> e_grid,
                      const BromwichConfig& cfg) {
  cfg.validate();
  if (e_grid.empty() || e_grid.size() > static_cast<std::size_t>(cfg.samples)) {
    throw std::invalid_argument("bromwich_dos: grid must hold between 1 and samples energies");
  }
  const double de = cfg.energy_step();
  for (std::size_t j = 1; j < e_grid.size(); ++j) {
    const double expected = e_grid[0] + static_cast<double>(j) * de;
    if (std::abs(e_grid[j] - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
      throw std::invalid_argument(
          "bromwich_dos: energy grid violates the reciprocity relation de * dtau = 2 pi / samples");
    }
  }

  const double e0 = ground_state_energy(params);
  const auto roots = drude::characteristic_roots(params);
  const int half = cfg.samples / 2;
  std::vector<Complex> f(half);
  for (int m = 0; m < half; ++m) {
    const Complex beta{cfg.sigma, m * cfg.tau_step()};
    f[m] = std::exp(log_partition_from_roots(params, roots, beta)) - std::exp(-beta * e0);
  }

  const Window other = cfg.window == Window::Gaussian ? Window::Cosine : Window::Gaussian;
  auto primary = invert(f, cfg, cfg.window, e_grid[0], e_grid.size());
  const auto check = invert(f, cfg, other, e_grid[0], e_grid.size());

  DosCurve curve;
  curve.energies.assign(e_grid.begin(), e_grid.end());
  curve.values = std::move(primary.values);
  curve.sigma = cfg.sigma;
  curve.ground_energy = e0;
  double peak = 0.0;
  double gap = 0.0;
  for (std::size_t j = 0; j < curve.values.size(); ++j) {
    peak = std::max(peak, std::abs(curve.values[j]));
    gap = std::max(gap, std::abs(curve.values[j] - check.values[j]));
  }
  curve.max_imag = peak > 0.0 ? primary.max_imag / peak : primary.max_imag;
  curve.window_gap = peak > 0.0 ? gap / peak : gap;
  curve.window_stable = curve.window_gap < 0.02;
  return curve;
}

}  // namespace openheat::dos
