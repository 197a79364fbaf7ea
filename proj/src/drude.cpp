#include "openheat/drude.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace openheat {

void DrudeParams::validate() const {
  if (!(gamma > 0.0) || !(omega_d > 0.0) || !(omega_0 >= 0.0) || !std::isfinite(gamma) ||
      !std::isfinite(omega_d) || !std::isfinite(omega_0)) {
    throw std::invalid_argument("DrudeParams: require gamma > 0, omega_d > 0, omega_0 >= 0");
  }
}

namespace drude {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("temperature theta must be positive and finite");
  }
}

// sum_i L_i^2 psi'(1 - L_i) - L_D^2 psi'(1 + L_D)
double trigamma_sum(const DrudeParams& params, double theta) {
  const double scale = 1.0 / (kTwoPi * theta);
  Complex sum = 0.0;
  for (const Complex& lambda : characteristic_roots(params)) {
    const Complex big_lambda = lambda * scale;
    sum += big_lambda * big_lambda * specfun::trigamma(1.0 - big_lambda);
  }
  if (std::abs(sum.imag()) > 1e-9) {
    throw std::runtime_error("Drude specific heat: conjugate roots failed to cancel");
  }
  const double cutoff = params.omega_d * scale;
  return sum.real() - cutoff * cutoff * specfun::trigamma(Complex{1.0 + cutoff, 0.0}).real();
}

using Real = long double;

// One Matsubara factor written as log(1 + u(nu)), with u -> 0 as nu -> inf.
// The rational function 1 + u = P(nu) / prod_j (nu + a_j) supplies the
// derivatives needed by the Euler-Maclaurin tail.
struct MatsubaraFactor {
  Real gamma_wd;
  Real wd;
  Real w0_sq;
  bool free;

  Real log1p_u(Real nu) const {
    Real u = gamma_wd / (nu * (nu + wd));
    if (!free) u += w0_sq / (nu * nu);
    return std::log1p(u);
  }

  // First and third derivatives of log(1 + u) with respect to nu.
  std::pair<Real, Real> derivatives(Real nu) const {
    Real p, dp, d2p, d3p;
    if (free) {
      p = (nu + wd) * nu + gamma_wd;
      dp = 2 * nu + wd;
      d2p = 2;
      d3p = 0;
    } else {
      p = ((nu + wd) * nu + gamma_wd + w0_sq) * nu + wd * w0_sq;
      dp = (3 * nu + 2 * wd) * nu + gamma_wd + w0_sq;
      d2p = 6 * nu + 2 * wd;
      d3p = 6;
    }
    const Real r1 = dp / p;
    Real first = r1;
    Real third = d3p / p - 3 * dp * d2p / (p * p) + 2 * r1 * r1 * r1;
    const int zeros = free ? 1 : 2;
    first -= zeros / nu + 1 / (nu + wd);
    third -= 2 * zeros / (nu * nu * nu) + 2 / ((nu + wd) * (nu + wd) * (nu + wd));
    return {first, third};
  }
};

}  // namespace

double kernel(const DrudeParams& params, double z) {
  params.validate();
  if (!(z >= 0.0)) {
    throw std::invalid_argument("kernel: argument must be non-negative");
  }
  return params.gamma * params.omega_d / (z + params.omega_d);
}

bool negativity_criterion(const DrudeParams& params) {
  params.validate();
  if (!params.is_free()) {
    throw std::invalid_argument("negativity_criterion: defined for the free particle only");
  }
  // gamma_hat'(0) = -gamma / omega_d
  return -params.gamma / params.omega_d < -1.0;
}

std::vector<Complex> characteristic_roots(const DrudeParams& params) {
  params.validate();
  const double wd = params.omega_d;
  if (params.is_free()) {
    const auto pair = specfun::solve_quadratic(wd, params.gamma * wd);
    return {pair.begin(), pair.end()};
  }
  const double w0_sq = params.omega_0 * params.omega_0;
  const auto cubic = specfun::solve_cubic(wd, params.gamma * wd + w0_sq, wd * w0_sq);
  return {cubic.roots.begin(), cubic.roots.end()};
}

HeatCurvePoint specific_heat_osc_drude(const DrudeParams& params, double theta) {
  require_theta(theta);
  if (params.is_free()) {
    throw std::invalid_argument("specific_heat_osc_drude: omega_0 must be positive");
  }
  return HeatCurvePoint::total_only(theta, 1.0 + trigamma_sum(params, theta));
}

HeatCurvePoint specific_heat_free_drude(const DrudeParams& params, double theta) {
  require_theta(theta);
  if (!params.is_free()) {
    throw std::invalid_argument("specific_heat_free_drude: omega_0 must be zero");
  }
  return HeatCurvePoint::total_only(theta, 0.5 + trigamma_sum(params, theta));
}

HeatCurvePoint specific_heat_drude(const DrudeParams& params, double theta) {
  return params.is_free() ? specific_heat_free_drude(params, theta)
                          : specific_heat_osc_drude(params, theta);
}

void MatsubaraConfig::validate() const {
  if (n_terms < 10 || tail_orders < 0 || tail_orders > 2) {
    throw std::invalid_argument("MatsubaraConfig: require n_terms >= 10 and tail_orders in 0..2");
  }
}

long double log_partition_matsubara(const DrudeParams& params, long double beta,
                                    const MatsubaraConfig& cfg) {
  params.validate();
  cfg.validate();
  if (!(beta > 0)) {
    throw std::invalid_argument("log_partition_matsubara: beta must be positive");
  }
  const MatsubaraFactor factor{static_cast<Real>(params.gamma) * params.omega_d, params.omega_d,
                               static_cast<Real>(params.omega_0) * params.omega_0,
                               params.is_free()};
  const Real nu_step = 2 * std::numbers::pi_v<Real> / beta;
  const long n_last = cfg.n_terms;

  // sum_{n>=1} log(1 + u(nu_n)); the factors themselves are exp(-log(1 + u)).
  Real sum = 0;
  const long explicit_end = cfg.tail_orders == 0 ? n_last : n_last - 1;
  for (long n = explicit_end; n >= 1; --n) {
    sum += factor.log1p_u(nu_step * n);
  }
  if (cfg.tail_orders >= 1) {
    const Real n0 = static_cast<Real>(n_last);
    // int_N^inf log(1 + u(nu_step x)) dx with x = N / t
    auto integrand = [&](Real t) { return factor.log1p_u(nu_step * n0 / t) * n0 / (t * t); };
    sum += boost::math::quadrature::gauss<Real, 30>::integrate(integrand, Real(0), Real(1));
    sum += factor.log1p_u(nu_step * n0) / 2;
    if (cfg.tail_orders >= 2) {
      const auto [d1, d3] = factor.derivatives(nu_step * n0);
      // - B2/2! f'(N) - B4/4! f'''(N), chain rule d/dx = nu_step d/dnu
      sum += -nu_step * d1 / 12 + nu_step * nu_step * nu_step * d3 / 720;
    }
  }

  const Real prefactor = params.is_free() ? -0.5L * std::log(beta)
                                          : -std::log(beta * static_cast<Real>(params.omega_0));
  return prefactor - sum;
}

double log_partition_matsubara_theta(const DrudeParams& params, double theta,
                                     const MatsubaraConfig& cfg) {
  require_theta(theta);
  return static_cast<double>(log_partition_matsubara(params, 1.0L / theta, cfg));
}

double specific_heat_numeric(const LogPartition& log_partition, double theta, double beta_step) {
  require_theta(theta);
  const Real beta = 1.0L / theta;
  const Real h = beta_step > 0.0 ? Real(beta_step) : std::max(Real(1e-4) * beta, Real(1e-6));
  const Real f_m2 = log_partition(beta - 2 * h);
  const Real f_m1 = log_partition(beta - h);
  const Real f_0 = log_partition(beta);
  const Real f_p1 = log_partition(beta + h);
  const Real f_p2 = log_partition(beta + 2 * h);
  const Real second = (-f_p2 + 16 * f_p1 - 30 * f_0 + 16 * f_m1 - f_m2) / (12 * h * h);
  return static_cast<double>(beta * beta * second);
}

MatsubaraHeat specific_heat_matsubara(const DrudeParams& params, double theta,
                                      const MatsubaraConfig& cfg) {
  auto heat_for = [&](const MatsubaraConfig& c) {
    return specific_heat_numeric(
        [&](long double beta) { return log_partition_matsubara(params, beta, c); }, theta);
  };
  const double c = heat_for(cfg);
  MatsubaraConfig doubled = cfg;
  doubled.n_terms *= 2;
  const double gap = std::abs(heat_for(doubled) - c);
  return {c, gap, gap < 1e-8};
}

}  // namespace drude
}  // namespace openheat
