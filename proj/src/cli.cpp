#include "openheat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "openheat/bathdisc.hpp"
#include "openheat/dos.hpp"
#include "openheat/drude.hpp"
#include "openheat/jacobi.hpp"
#include "openheat/minimal.hpp"

namespace openheat::cli {

namespace {

enum class Model { MinimalFree, MinimalOsc, DrudeFree, DrudeOsc, Bathdisc };

const std::map<std::string, Model> kModelNames = {
    {"minimal-free", Model::MinimalFree}, {"minimal-osc", Model::MinimalOsc},
    {"drude-free", Model::DrudeFree},     {"drude-osc", Model::DrudeOsc},
    {"bathdisc", Model::Bathdisc},
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Every physical flag is optional so that --figure and the per-model
// defaults can fill in whatever the user left out.
struct Flags {
  std::string figure;
  std::optional<Model> model;
  std::optional<double> mass_ratio, omega, omega0, gamma, omega_d;
  std::optional<double> tmin, tmax;
  int points = 200;
  std::string scale = "log";
  int modes = 256;
  double omega_max = 0.0;
  std::string output;

  // dos
  std::optional<double> emin, emax;
  double sigma = dos::BromwichConfig{}.sigma;
  double tau_max = dos::BromwichConfig{}.tau_max;
  int samples = dos::BromwichConfig{}.samples;
  std::string window = "gauss";
  double span = 15.0;

  // converge
  std::vector<int> mode_list = {16, 32, 64, 128, 256};
};

void apply_figure(Flags& f) {
  if (f.figure.empty()) return;
  auto set = [](auto& slot, auto value) {
    if (!slot) slot = value;
  };
  if (f.figure == "1") {
    // theta in units of omega_d, the omega_d / gamma = 0.2 curve
    set(f.model, Model::DrudeFree);
    set(f.gamma, 5.0);
    set(f.omega_d, 1.0);
    set(f.tmin, 1e-3);
    set(f.tmax, 10.0);
  } else if (f.figure == "3") {
    set(f.model, Model::MinimalFree);
    set(f.mass_ratio, 10.0);
    set(f.omega, 1.0);
    set(f.tmin, 1e-2);
    set(f.tmax, 10.0);
  } else if (f.figure == "4") {
    set(f.model, Model::MinimalOsc);
    set(f.mass_ratio, 10.0);
    set(f.omega, 1.0);
    set(f.omega0, 1.0);
    set(f.tmin, 1e-2);
    set(f.tmax, 10.0);
  } else if (f.figure == "cho") {
    set(f.model, Model::DrudeOsc);
    set(f.gamma, 5.0);
    set(f.omega_d, 0.1);
    set(f.omega0, 1.0);
    set(f.tmin, 1e-3);
    set(f.tmax, 10.0);
  } else if (f.figure == "5") {
    set(f.model, Model::DrudeOsc);
    set(f.gamma, 5.0);
    set(f.omega_d, 0.1);
    set(f.omega0, 1.0);
  } else {
    throw UsageError("unknown figure '" + f.figure + "'");
  }
}

MinimalModelParams minimal_params(const Flags& f, bool bound) {
  MinimalModelParams p;
  p.mass_ratio = f.mass_ratio.value_or(10.0);
  p.bath_freq = f.omega.value_or(1.0);
  p.system_freq = bound ? f.omega0.value_or(1.0) : 0.0;
  if (bound && p.system_freq == 0.0) throw UsageError("minimal-osc needs --omega0 > 0");
  if (!bound && f.omega0.value_or(0.0) != 0.0) throw UsageError("minimal-free takes no --omega0");
  p.validate();
  return p;
}

DrudeParams drude_params(const Flags& f, bool bound) {
  DrudeParams p;
  p.gamma = f.gamma.value_or(5.0);
  p.omega_d = f.omega_d.value_or(bound ? 0.1 : 1.0);
  p.omega_0 = bound ? f.omega0.value_or(1.0) : 0.0;
  if (bound && p.omega_0 == 0.0) throw UsageError("drude-osc needs --omega0 > 0");
  if (!bound && f.omega0.value_or(0.0) != 0.0) throw UsageError("drude-free takes no --omega0");
  p.validate();
  return p;
}

std::vector<double> theta_grid(const Flags& f) {
  const double lo = f.tmin.value_or(1e-2);
  const double hi = f.tmax.value_or(10.0);
  if (!(lo > 0.0) || !(lo < hi) || f.points < 2) {
    throw UsageError("need 0 < --tmin < --tmax and --points >= 2");
  }
  std::vector<double> grid(f.points);
  const double last = f.points - 1;
  for (int i = 0; i < f.points; ++i) {
    grid[i] = f.scale == "log" ? lo * std::pow(hi / lo, i / last) : lo + (hi - lo) * (i / last);
  }
  grid.back() = hi;
  return grid;
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string{};
}

void cmd_curve(const Flags& f, std::ostream& out) {
  if (!f.model) throw UsageError("curve: --model or --figure is required");
  const auto grid = theta_grid(f);
  std::vector<HeatCurvePoint> rows;
  rows.reserve(grid.size());
  switch (*f.model) {
    case Model::MinimalFree: {
      const auto p = minimal_params(f, false);
      for (double t : grid) rows.push_back(minimal::specific_heat_free_minimal(p, t));
      break;
    }
    case Model::MinimalOsc: {
      const auto p = minimal_params(f, true);
      for (double t : grid) rows.push_back(minimal::specific_heat_osc_minimal(p, t));
      break;
    }
    case Model::DrudeFree:
    case Model::DrudeOsc: {
      const auto p = drude_params(f, *f.model == Model::DrudeOsc);
      for (double t : grid) rows.push_back(drude::specific_heat_drude(p, t));
      break;
    }
    case Model::Bathdisc: {
      const auto p = drude_params(f, f.omega0.value_or(1.0) != 0.0);
      const auto spectrum =
          bathdisc::normal_modes(bathdisc::discretize_drude(p, f.modes, f.omega_max));
      for (double t : grid) {
        rows.push_back(bathdisc::specific_heat_difference(spectrum, t, p.is_free()));
      }
      break;
    }
  }
  out << "theta,c_total,c_coupled,c_bath\n";
  for (const auto& r : rows) {
    out << format_number(r.theta) << ',' << format_number(r.c_total) << ','
        << optional_field(r.c_coupled) << ',' << optional_field(r.c_bath) << '\n';
  }
}

void write_comb(const dos::DeltaComb& comb, std::ostream& out) {
  out << "# E0 = " << format_number(comb.entries.front().energy) << '\n';
  out << "energy,weight\n";
  for (const auto& e : comb.entries) out << format_number(e.energy) << ',' << e.weight << '\n';
}

void cmd_dos(const Flags& f, std::ostream& out, std::ostream& err) {
  const Model model = f.model.value_or(Model::DrudeOsc);
  switch (model) {
    case Model::MinimalOsc: {
      write_comb(dos::delta_comb_osc_minimal(minimal_params(f, true), f.emax.value_or(20.0)), out);
      return;
    }
    case Model::MinimalFree: {
      const auto p = minimal_params(f, false);
      const double e_lo = f.emin.value_or(0.0);
      const double e_hi = f.emax.value_or(10.0);
      if (!(e_lo < e_hi) || f.points < 2) throw UsageError("need --emin < --emax and --points >= 2");
      std::vector<double> grid(f.points);
      for (int i = 0; i < f.points; ++i) grid[i] = e_lo + (e_hi - e_lo) * i / (f.points - 1.0);
      const auto branches = dos::free_minimal_branches(p, std::max(e_hi, 1e-300));
      const auto curve = dos::dos_free_minimal(p, grid);
      out << "# E0 = " << format_number(branches.entries.front().energy) << '\n';
      out << "energy,rho\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        out << format_number(curve.energies[i]) << ',' << format_number(curve.values[i]) << '\n';
      }
      return;
    }
    case Model::DrudeOsc: {
      const auto p = drude_params(f, true);
      dos::BromwichConfig cfg;
      cfg.sigma = f.sigma;
      cfg.tau_max = f.tau_max;
      cfg.samples = f.samples;
      if (f.window == "gauss") {
        cfg.window = dos::Window::Gaussian;
      } else if (f.window == "cosine") {
        cfg.window = dos::Window::Cosine;
      } else {
        throw UsageError("--window must be gauss or cosine");
      }
      cfg.validate();
      const double e0 = dos::ground_state_energy(p);
      const double start = f.emin.value_or(e0 - 0.5);
      const double stop = f.emax.value_or(e0 + f.span);
      if (!(stop > start)) throw UsageError("empty energy range");
      const int count = static_cast<int>(std::floor((stop - start) / cfg.energy_step())) + 1;
      if (count > cfg.samples) throw UsageError("energy range needs more than --samples points");
      const auto grid = dos::bromwich_grid(cfg, start, count);
      const auto curve = dos::bromwich_dos(p, grid, cfg);
      if (!curve.window_stable) {
        err << "warning: window sensitivity " << format_number(curve.window_gap)
            << " of peak exceeds 2%\n";
      }
      out << "# E0 = " << format_number(e0) << '\n';
      out << "# window_gap = " << format_number(curve.window_gap) << '\n';
      out << "energy,rho\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        out << format_number(curve.energies[i]) << ',' << format_number(curve.values[i]) << '\n';
      }
      return;
    }
    case Model::DrudeFree:
    case Model::Bathdisc:
      throw UsageError("dos supports minimal-osc, minimal-free and drude-osc");
  }
}

// Rounds to the printed precision so the JSON writer's shortest
// representation matches format_number.
double rounded(double v) { return std::stod(format_number(v)); }

void cmd_threshold(std::ostream& out) {
  const double r_star = minimal::free_threshold_mass_ratio();
  nlohmann::ordered_json report;
  report["r_star"] = rounded(r_star);
  report["theta_at_min"] = rounded(minimal::free_minimum(r_star).theta);
  report["c_min_at_4"] = rounded(minimal::free_minimum(4.0).c_total);
  report["c_min_at_10"] = rounded(minimal::free_minimum(10.0).c_total);
  out << report.dump(2) << '\n';
}

void cmd_converge(const Flags& f, std::ostream& out) {
  const auto p = drude_params(f, true);
  Flags sweep = f;
  sweep.tmin = f.tmin.value_or(0.1);
  sweep.tmax = f.tmax.value_or(100.0);
  sweep.scale = "log";
  const auto grid = theta_grid(sweep);
  std::vector<double> exact;
  for (double t : grid) exact.push_back(drude::specific_heat_osc_drude(p, t).c_total);

  nlohmann::ordered_json report;
  report["gamma"] = rounded(p.gamma);
  report["omega_d"] = rounded(p.omega_d);
  report["omega_0"] = rounded(p.omega_0);
  report["theta_min"] = rounded(grid.front());
  report["theta_max"] = rounded(grid.back());
  report["results"] = nlohmann::ordered_json::array();
  for (int n : f.mode_list) {
    if (n < 1) throw UsageError("--modes-list entries must be positive");
    const auto spectrum = bathdisc::normal_modes(bathdisc::discretize_drude(p, n, f.omega_max));
    double dist = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double c = bathdisc::specific_heat_difference(spectrum, grid[i], false).c_total;
      dist = std::max(dist, std::abs(c - exact[i]));
    }
    nlohmann::ordered_json row;
    row["n_modes"] = n;
    row["max_norm_distance"] = rounded(dist);
    report["results"].push_back(row);
  }
  out << report.dump(2) << '\n';
}

void add_model_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--mass-ratio", f.mass_ratio, "m/M of the single bath mode");
  cmd->add_option("--omega", f.omega, "bath mode frequency");
  cmd->add_option("--omega0", f.omega0, "system frequency (0: free particle)");
  cmd->add_option("--gamma", f.gamma, "Drude damping strength");
  cmd->add_option("--omega-d", f.omega_d, "Drude cutoff frequency");
  cmd->add_option("--output", f.output, "write to PATH instead of stdout");
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Specific heat and density of states of a damped quantum system"};
  app.require_subcommand(1);
  Flags f;

  std::string model_name;
  auto model_check = CLI::IsMember(kModelNames);

  auto* curve = app.add_subcommand("curve", "specific heat C(theta) as CSV");
  add_model_flags(curve, f);
  curve->add_option("--model", model_name)->check(model_check);
  curve->add_option("--figure", f.figure, "preset: 1, 3, 4, cho");
  curve->add_option("--tmin", f.tmin);
  curve->add_option("--tmax", f.tmax);
  curve->add_option("--points", f.points);
  curve->add_option("--scale", f.scale)->check(CLI::IsMember({"log", "linear"}));
  curve->add_option("--modes", f.modes, "bath modes for --model bathdisc");
  curve->add_option("--omega-max", f.omega_max, "highest bath mode (default 100 omega_d)");

  auto* dos_cmd = app.add_subcommand("dos", "density of states as CSV");
  add_model_flags(dos_cmd, f);
  dos_cmd->add_option("--model", model_name)->check(model_check);
  dos_cmd->add_option("--figure", f.figure, "preset: 5");
  dos_cmd->add_option("--emin", f.emin);
  dos_cmd->add_option("--emax", f.emax);
  dos_cmd->add_option("--points", f.points, "grid size for minimal-free");
  dos_cmd->add_option("--span", f.span, "drude-osc: energies up to E0 + span");
  dos_cmd->add_option("--sigma", f.sigma);
  dos_cmd->add_option("--tau-max", f.tau_max);
  dos_cmd->add_option("--samples", f.samples);
  dos_cmd->add_option("--window", f.window)->check(CLI::IsMember({"gauss", "cosine"}));

  auto* threshold = app.add_subcommand("threshold", "critical mass ratio report as JSON");
  threshold->add_option("--output", f.output);

  auto* converge = app.add_subcommand("converge", "discretized-bath convergence as JSON");
  add_model_flags(converge, f);
  converge->add_option("--modes-list", f.mode_list)->delimiter(',');
  converge->add_option("--tmin", f.tmin);
  converge->add_option("--tmax", f.tmax);
  converge->add_option("--points", f.points);
  converge->add_option("--omega-max", f.omega_max);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!model_name.empty()) f.model = kModelNames.at(model_name);

  std::ostringstream buffer;
  try {
    apply_figure(f);
    if (curve->parsed()) {
      cmd_curve(f, buffer);
    } else if (dos_cmd->parsed()) {
      cmd_dos(f, buffer, err);
    } else if (threshold->parsed()) {
      cmd_threshold(buffer);
    } else {
      cmd_converge(f, buffer);
    }
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  }

  if (f.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(f.output);
    if (!(file << buffer.str())) {
      err << "error: cannot write " << f.output << '\n';
      return kUsage;
    }
  }
  return kOk;
}

}  // namespace openheat::cli
