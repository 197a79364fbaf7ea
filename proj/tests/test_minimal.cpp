#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "openheat/minimal.hpp"
#include "openheat/specfun.hpp"

using namespace openheat;
using doctest::Approx;

namespace {

MinimalModelParams free_params(double r, double w = 1.0) { return {r, w, 0.0}; }
MinimalModelParams osc_params(double r, double w, double big_w) { return {r, w, big_w}; }

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(free_params(-1.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(free_params(1.0, 0.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(osc_params(1.0, 1.0, -1.0).validate(), std::invalid_argument);
  CHECK_NOTHROW(free_params(0.0).validate());
  CHECK_THROWS_AS(minimal::specific_heat_free_minimal(free_params(1.0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(minimal::normal_modes_osc(free_params(1.0)), std::invalid_argument);
}

TEST_CASE("coupled frequency of the free model") {
  CHECK(minimal::coupled_frequency_free(free_params(3.0, 2.0)) == Approx(4.0).epsilon(1e-15));
}

TEST_CASE("free model reference points") {
  // omega_bar = 2 at m/M = 3, omega = 1
  const auto p = free_params(3.0);
  const auto pt = minimal::specific_heat_free_minimal(p, 0.5);
  CHECK(pt.c_coupled.value() == Approx(0.5 + specfun::boson_heat(2.0)).epsilon(1e-15));
  CHECK(pt.c_bath.value() == Approx(specfun::boson_heat(1.0)).epsilon(1e-15));
  CHECK(pt.c_total == pt.c_coupled.value() - pt.c_bath.value());
}

TEST_CASE("normal modes at m/M = 10, omega = Omega = 1") {
  const auto m = minimal::normal_modes_osc(osc_params(10.0, 1.0, 1.0));
  CHECK(m.omega_plus == Approx(3.451967523471160).epsilon(1e-14));
  CHECK(m.omega_minus == Approx(0.2896898633027810).epsilon(1e-14));
}

TEST_CASE("normal modes in the decoupled and heavy-bath limits") {
  const auto d = minimal::normal_modes_osc(osc_params(1e-12, 2.0, 1.0));
  CHECK(d.omega_plus == Approx(2.0).epsilon(1e-10));
  CHECK(d.omega_minus == Approx(1.0).epsilon(1e-10));
  const auto h = minimal::normal_modes_osc(osc_params(1e4, 1.0, 1.0));
  CHECK(h.omega_minus == Approx(0.01).epsilon(1e-2));
  CHECK(h.omega_plus == Approx(100.0).epsilon(1e-2));
}

TEST_CASE("product rule and ordering on random parameters") {
  testgen::Gen gen(21);
  for (int k = 0; k < 1000; ++k) {
    const auto p = osc_params(gen.log_uniform(1e-6, 1e6), gen.log_uniform(1e-3, 1e3),
                              gen.log_uniform(1e-3, 1e3));
    const auto m = minimal::normal_modes_osc(p);
    const double product = p.bath_freq * p.system_freq;
    CHECK(std::abs(m.omega_plus * m.omega_minus - product) <= 1e-12 * product);
    CHECK(m.omega_minus <= std::min(p.bath_freq, m.omega_plus) * (1 + 1e-14));
    CHECK(p.bath_freq <= m.omega_plus * (1 + 1e-14));
  }
}

TEST_CASE("oscillator positivity on a 200^3 grid") {
  const auto ratios = testgen::log_grid(0.1, 100.0, 200);
  const auto freq_ratios = testgen::log_grid(0.1, 10.0, 200);
  const auto thetas = testgen::log_grid(1e-3, 1e3, 200);
  double lowest = 1.0;
  for (double r : ratios) {
    for (double q : freq_ratios) {
      const auto p = osc_params(r, q, 1.0);
      for (double t : thetas) {
        lowest = std::min(lowest, minimal::specific_heat_osc_minimal(p, t).c_total);
      }
    }
  }
  CHECK(lowest >= 0.0);
}

TEST_CASE("decoupling at m/M = 1e-12") {
  for (double t : testgen::log_grid(1e-3, 1e3, 61)) {
    CHECK(std::abs(minimal::specific_heat_free_minimal(free_params(1e-12), t).c_total - 0.5) < 1e-6);
    const double g = specfun::boson_heat(1.0 / (2.0 * t));
    const double c = minimal::specific_heat_osc_minimal(osc_params(1e-12, 2.0, 1.0), t).c_total;
    CHECK(std::abs(c - g) < 1e-6);
  }
}

TEST_CASE("low and high temperature limits") {
  testgen::Gen gen(22);
  for (int k = 0; k < 50; ++k) {
    const double r = gen.log_uniform(0.1, 100.0);
    const double w = gen.log_uniform(0.1, 10.0);
    const auto osc = osc_params(r, w, 1.0);
    const auto free = free_params(r, w);
    const double w_min = minimal::normal_modes_osc(osc).omega_minus;
    // all g arguments above 50
    const double cold = std::min(w_min, w) / 100.0;
    CHECK(std::abs(minimal::specific_heat_osc_minimal(osc, cold).c_total) < 1e-6);
    CHECK(std::abs(minimal::specific_heat_free_minimal(free, w / 100.0).c_total - 0.5) < 1e-6);
    CHECK(minimal::specific_heat_osc_minimal(osc, 1e4).c_total == Approx(1.0).epsilon(1e-6));
    CHECK(minimal::specific_heat_free_minimal(free, 1e4).c_total == Approx(0.5).epsilon(1e-6));
  }
}

TEST_CASE("c_total equals c_coupled - c_bath exactly") {
  testgen::Gen gen(23);
  for (int k = 0; k < 200; ++k) {
    const double t = gen.log_uniform(1e-3, 1e3);
    const auto p = osc_params(gen.log_uniform(0.1, 100.0), gen.log_uniform(0.1, 10.0),
                              gen.coin() ? 0.0 : 1.0);
    const auto pt = p.is_free() ? minimal::specific_heat_free_minimal(p, t)
                                : minimal::specific_heat_osc_minimal(p, t);
    CHECK(pt.c_total == *pt.c_coupled - *pt.c_bath);
  }
}

TEST_CASE("bound particle at m/M = 10 shows a strict interior dip") {
  const auto p = osc_params(10.0, 1.0, 1.0);
  const auto grid = testgen::log_grid(1e-2, 10.0, 400);
  std::vector<double> c;
  for (double t : grid) c.push_back(minimal::specific_heat_osc_minimal(p, t).c_total);
  bool found = false;
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i] < c[i - 1] && c[i] < c[i + 1] && c[i] > 0.0 && c[i] < 1.0) found = true;
  }
  CHECK(found);
}

TEST_CASE("free minimum and threshold regression values") {
  const auto at10 = minimal::free_minimum(10.0);
  CHECK(at10.c_total == Approx(-0.177455264838891).epsilon(1e-10));
  CHECK(at10.theta == Approx(0.5662674964315610).epsilon(1e-6));
  const auto at4 = minimal::free_minimum(4.0);
  CHECK(at4.c_total == Approx(0.000782482139783).epsilon(1e-8));
  CHECK(at4.c_total > 0.0);
  CHECK(at4.theta == Approx(0.4448833).epsilon(1e-5));
  CHECK(minimal::free_minimum(5.0).c_total == Approx(-0.04519468174212).epsilon(1e-9));
  const double r_star = minimal::free_threshold_mass_ratio();
  CHECK(std::abs(r_star - 4.015089017034215) < 1e-6);
  CHECK(minimal::free_minimum(r_star - 1e-5).c_total > 0.0);
  CHECK(minimal::free_minimum(r_star + 1e-5).c_total < 0.0);
}
