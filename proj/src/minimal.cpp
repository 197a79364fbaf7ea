#include "openheat/minimal.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <stdexcept>

#include "openheat/specfun.hpp"

namespace openheat {

void MinimalModelParams::validate() const {
  if (!(mass_ratio >= 0.0) || !(bath_freq > 0.0) || !(system_freq >= 0.0) ||
      !std::isfinite(mass_ratio) || !std::isfinite(bath_freq) || !std::isfinite(system_freq)) {
    throw std::invalid_argument("MinimalModelParams: require m/M >= 0, omega > 0, Omega >= 0");
  }
}

namespace minimal {

using specfun::boson_heat;

namespace {

void require_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("temperature theta must be positive and finite");
  }
}

}  // namespace

double coupled_frequency_free(const MinimalModelParams& params) {
  params.validate();
  if (!params.is_free()) {
    throw std::invalid_argument("coupled_frequency_free: system frequency must be zero");
  }
  return std::sqrt(1.0 + params.mass_ratio) * params.bath_freq;
}

HeatCurvePoint specific_heat_free_minimal(const MinimalModelParams& params, double theta) {
  require_theta(theta);
  const double omega_bar = coupled_frequency_free(params);
  const double coupled = 0.5 + boson_heat(omega_bar / (2.0 * theta));
  const double bath = boson_heat(params.bath_freq / (2.0 * theta));
  return HeatCurvePoint::from_parts(theta, coupled, bath);
}

NormalModes normal_modes_osc(const MinimalModelParams& params) {
  params.validate();
  if (params.is_free()) {
    throw std::invalid_argument("normal_modes_osc: system frequency must be positive");
  }
  const double w = params.bath_freq;
  const double big = params.system_freq;
  const double a = (1.0 + params.mass_ratio) * w * w;
  const double b = big * big;
  // S^2/4 - w^2 W^2 = ((a - b)^2 + 4 r w^2 W^2) / 4
  const double root = 0.5 * std::hypot(a - b, 2.0 * std::sqrt(params.mass_ratio) * w * big);
  const double plus_sq = 0.5 * (a + b) + root;
  const double minus_sq = (w * big) * (w * big) / plus_sq;
  return {std::sqrt(plus_sq), std::sqrt(minus_sq)};
}

HeatCurvePoint specific_heat_osc_minimal(const MinimalModelParams& params, double theta) {
  require_theta(theta);
  const auto modes = normal_modes_osc(params);
  const double coupled =
      boson_heat(modes.omega_plus / (2.0 * theta)) + boson_heat(modes.omega_minus / (2.0 * theta));
  const double bath = boson_heat(params.bath_freq / (2.0 * theta));
  return HeatCurvePoint::from_parts(theta, coupled, bath);
}

CurveMinimum free_minimum(double mass_ratio) {
  const MinimalModelParams params{mass_ratio, 1.0, 0.0};
  auto curve = [&](double log_theta) {
    return specific_heat_free_minimal(params, std::exp(log_theta)).c_total;
  };
  const double lo = std::log(1e-3);
  const double hi = std::log(1e2);
  // Coarse scan to bracket the interior minimum, then Brent (golden section
  // with parabolic steps) inside the bracket.
  constexpr int kScan = 400;
  const double step = (hi - lo) / kScan;
  int best = 0;
  double best_value = curve(lo);
  for (int i = 1; i <= kScan; ++i) {
    const double v = curve(lo + i * step);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const double a = lo + std::max(best - 1, 0) * step;
  const double b = lo + std::min(best + 1, kScan) * step;
  const auto [x, fx] = boost::math::tools::brent_find_minima(curve, a, b, 52);
  return {std::exp(x), fx};
}

double free_threshold_mass_ratio() {
  double lo = 4.0;   // minimum still positive
  double hi = 5.0;   // minimum already negative
  if (!(free_minimum(lo).c_total > 0.0) || !(free_minimum(hi).c_total < 0.0)) {
    throw std::runtime_error("free_threshold_mass_ratio: sign change not bracketed by [4, 5]");
  }
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (free_minimum(mid).c_total > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace minimal
}  // namespace openheat
