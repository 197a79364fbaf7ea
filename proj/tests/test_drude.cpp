#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "openheat/drude.hpp"
#include "openheat/specfun.hpp"

using namespace openheat;
using doctest::Approx;

namespace {

const DrudeParams kCho{5.0, 0.1, 1.0};

double matsubara_heat(const DrudeParams& p, double theta, drude::MatsubaraConfig cfg = {}) {
  return drude::specific_heat_numeric(
      [&](long double beta) { return drude::log_partition_matsubara(p, beta, cfg); }, theta);
}

}  // namespace

TEST_CASE("kernel") {
  CHECK(drude::kernel(kCho, 0.0) == 5.0);
  CHECK(drude::kernel(kCho, 0.1) == Approx(2.5).epsilon(1e-15));
  CHECK(drude::kernel(kCho, 1e9 * 0.1) < 1e-8 * 5.0);
  CHECK_THROWS_AS(drude::kernel(kCho, -1.0), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DrudeParams({0.0, 1.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(DrudeParams({1.0, 0.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(DrudeParams({1.0, 1.0, -1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(drude::specific_heat_osc_drude(kCho, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(drude::specific_heat_osc_drude({1.0, 1.0, 0.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(drude::specific_heat_free_drude(kCho, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(drude::MatsubaraConfig({5, 2}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(drude::MatsubaraConfig({100, 3}).validate(), std::invalid_argument);
}

TEST_CASE("negativity criterion") {
  CHECK(drude::negativity_criterion({1.0, 0.2, 0.0}));
  CHECK_FALSE(drude::negativity_criterion({1.0, 5.0, 0.0}));
  CHECK_FALSE(drude::negativity_criterion({1.0, 1.0, 0.0}));
  CHECK_THROWS_AS(drude::negativity_criterion(kCho), std::invalid_argument);
}

TEST_CASE("characteristic roots") {
  const auto r = drude::characteristic_roots(kCho);
  REQUIRE(r.size() == 3);
  CHECK(r[0].real() == Approx(-0.06676543144782437).epsilon(1e-13));
  CHECK(r[2].real() == Approx(-0.01661728427608782).epsilon(1e-13));
  CHECK(r[2].imag() == Approx(1.223725845749333).epsilon(1e-13));
  CHECK(std::abs(std::abs(r[2].imag()) - 1.224) < 1e-3);

  const auto f = drude::characteristic_roots({5.0, 0.1, 0.0});
  REQUIRE(f.size() == 2);
  CHECK(f[1].real() == Approx(-0.05).epsilon(1e-14));
  CHECK(f[1].imag() == Approx(0.7053367989832942).epsilon(1e-14));

  // undamped: (x + 1)(x^2 + 1)
  const auto u = drude::characteristic_roots({1e-12, 1.0, 1.0});
  CHECK(std::abs(u[0] + 1.0) < 1e-10);
  CHECK(std::abs(u[2] - specfun::Complex(0.0, 1.0)) < 1e-10);
}

TEST_CASE("characteristic roots lie in the left half plane") {
  testgen::Gen gen(31);
  for (int k = 0; k < 200; ++k) {
    const DrudeParams p{gen.log_uniform(1e-2, 1e2), gen.log_uniform(1e-2, 1e2),
                        gen.coin() ? 0.0 : gen.log_uniform(1e-2, 1e2)};
    for (const auto& z : drude::characteristic_roots(p)) CHECK(z.real() < 0.0);
  }
}

TEST_CASE("classical plateaus") {
  CHECK(std::abs(drude::specific_heat_osc_drude(kCho, 1e3).c_total - 1.0) < 1e-4);
  CHECK(std::abs(drude::specific_heat_free_drude({5.0, 1.0, 0.0}, 1e3).c_total - 0.5) < 1e-4);
  CHECK(std::abs(drude::specific_heat_free_drude({1.0, 5.0, 0.0}, 1e3).c_total - 0.5) < 1e-4);
}

TEST_CASE("Drude results carry only c_total") {
  const auto pt = drude::specific_heat_drude(kCho, 0.3);
  CHECK_FALSE(pt.c_coupled.has_value());
  CHECK_FALSE(pt.c_bath.has_value());
  CHECK(pt.theta == 0.3);
}

TEST_CASE("undamped Matsubara product matches the sinh form") {
  const DrudeParams p{1e-14, 0.1, 1.0};
  for (double t : testgen::log_grid(0.02, 50.0, 25)) {
    const double exact = -std::log(2.0 * std::sinh(0.5 / t));
    CHECK(std::abs(drude::log_partition_matsubara_theta(p, t) - exact) < 1e-8);
  }
}

TEST_CASE("numeric second derivative on closed forms") {
  for (double t : testgen::log_grid(0.05, 20.0, 15)) {
    const double c = drude::specific_heat_numeric(
        [](long double b) { return -std::log(2.0L * std::sinh(b / 2)); }, t);
    CHECK(std::abs(c - specfun::boson_heat(0.5 / t)) < 1e-7);
    const double half =
        drude::specific_heat_numeric([](long double b) { return -0.5L * std::log(b); }, t);
    CHECK(std::abs(half - 0.5) < 1e-7);
  }
}

TEST_CASE("oracle agreement at the reference point") {
  CHECK(std::abs(drude::specific_heat_osc_drude(kCho, 0.05).c_total - matsubara_heat(kCho, 0.05)) <
        1e-6);
  CHECK(std::abs(drude::specific_heat_osc_drude(kCho, 0.1).c_total - matsubara_heat(kCho, 0.1)) <
        1e-6);
  const DrudeParams free{5.0, 1.0, 0.0};
  CHECK(std::abs(drude::specific_heat_free_drude(free, 0.1).c_total - matsubara_heat(free, 0.1)) <
        1e-6);
}

TEST_CASE("the opposite cutoff sign disagrees with the oracle") {
  // psi'(1 - L_D) instead of psi'(1 + L_D)
  const double theta = 0.05;
  const double ld = kCho.omega_d / (2 * std::numbers::pi * theta);
  const double plus = specfun::trigamma({1.0 + ld, 0.0}).real();
  const double minus = specfun::trigamma({1.0 - ld, 0.0}).real();
  const double flipped = drude::specific_heat_osc_drude(kCho, theta).c_total + ld * ld * (plus - minus);
  CHECK(std::abs(flipped - matsubara_heat(kCho, theta)) > 1e-3);
}

TEST_CASE("tail correction: 10 terms against 1e5") {
  drude::MatsubaraConfig few{10, 2};
  drude::MatsubaraConfig many{100000, 2};
  CHECK(std::abs(matsubara_heat(kCho, 1.0, few) - matsubara_heat(kCho, 1.0, many)) < 1e-6);
}

TEST_CASE("doubling test reports convergence") {
  const auto m = drude::specific_heat_matsubara(kCho, 0.1);
  CHECK(m.converged);
  CHECK(m.doubling_gap < 1e-8);
  const auto rough = drude::specific_heat_matsubara(kCho, 0.1, {10, 0});
  CHECK_FALSE(rough.converged);
}

TEST_CASE("closed form against the oracle on random parameters") {
  testgen::Gen gen(32);
  for (int k = 0; k < 5; ++k) {
    const DrudeParams p{gen.log_uniform(0.1, 10.0), gen.log_uniform(0.05, 20.0),
                        k == 4 ? 0.0 : 1.0};
    for (double t : testgen::log_grid(1e-2, 1e2, 8)) {
      INFO("gamma " << p.gamma << " omega_d " << p.omega_d << " theta " << t);
      CHECK(std::abs(drude::specific_heat_drude(p, t).c_total - matsubara_heat(p, t)) < 1e-6);
    }
  }
}

TEST_CASE("oscillator positivity and realness on a parameter grid") {
  double lowest = 1.0;
  for (double g : testgen::log_grid(0.1, 10.0, 15)) {
    for (double wd : testgen::log_grid(0.05, 20.0, 15)) {
      for (double t : testgen::log_grid(1e-4, 1e3, 60)) {
        lowest = std::min(lowest, drude::specific_heat_osc_drude({g, wd, 1.0}, t).c_total);
      }
    }
  }
  CHECK(lowest >= -1e-9);
}

TEST_CASE("linear low-temperature rise with slope pi gamma / 3") {
  // C = (pi / 3) gamma theta / Omega^2 + O(theta^3)
  for (double g : {1.0, 5.0, 10.0}) {
    const double t = 1e-5;
    CHECK(drude::specific_heat_osc_drude({g, 0.1, 1.0}, t).c_total / t ==
          Approx(std::numbers::pi * g / 3.0).epsilon(1e-4));
  }
}

TEST_CASE("free particle sign follows the criterion") {
  CHECK(drude::specific_heat_free_drude({1.0, 0.2, 0.0}, 1e-3).c_total < 0.0);
  double lowest = 1.0;
  for (double t : testgen::log_grid(1e-3, 1e3, 300)) {
    lowest = std::min(lowest, drude::specific_heat_free_drude({1.0, 5.0, 0.0}, t).c_total);
  }
  CHECK(lowest >= 0.0);
}
