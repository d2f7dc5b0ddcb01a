// casimir: Lifshitz pressure between planar multilayer mirrors.
//
//   casimir force  SCENARIO --d D [--T TAU]
//   casimir sweep  SCENARIO [-o OUT.csv]
//   casimir asympt SCENARIO --d D [--T TAU]
//   casimir preset NAME [-o OUT]
//
// Exit codes: 0 ok, 1 usage or I/O, 2 parse or validation, 3 convergence, 4 internal.

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/scenario.hpp"
#include "casimir/special.hpp"
#include "casimir/sweep.hpp"

namespace {

using namespace casimir;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kConvergence = 3, kInternal = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double tol = 1e-8;
  long max_matsubara = 1'000'000;
  std::optional<double> omega_rad_s;
  bool quiet = false;
  int workers = 1;

  QuadratureConfig config() const {
    QuadratureConfig cfg;
    cfg.rel_tol = tol;
    cfg.max_matsubara = max_matsubara;
    cfg.workers = workers;
    return cfg;
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

Scenario load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("write failed for '" + path + "'");
}

// out.csv + tau -> out_T<tau>.csv
std::string suffixed(const std::string& path, double tau) {
  const std::string tag = "_T" + shortest(tau);
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + tag;
  return path.substr(0, dot) + tag + path.substr(dot);
}

void cmd_force(const Options& opt, const std::string& path, double d, std::optional<double> tau) {
  const Scenario s = load(path);
  const double t = tau.value_or(s.temperature);
  const ForceResult f = force(s.stack1(), s.stack2(), s.gap_medium(), d, t, opt.config());
  std::cout << "d=" << sci(d) << "\n"
            << "d_over_lambda=" << sci(d / (2.0 * kPi)) << "\n"
            << "tau=" << sci(t) << "\n"
            << "pressure_norm=" << sci(f.pressure_norm) << "\n"
            << "te_part=" << sci(f.te_part) << "\n"
            << "tm_part=" << sci(f.tm_part) << "\n"
            << "bound_lo=" << sci(f.bound_lo) << "\n"
            << "bound_hi=" << sci(f.bound_hi) << "\n"
            << "n_terms_used=" << f.n_terms_used << "\n"
            << "est_error=" << sci(f.est_error) << "\n";
  if (opt.omega_rad_s) {
    std::cout << "F_SI_Pa=" << sci(pressure_si(f.pressure_norm, d, *opt.omega_rad_s)) << "\n";
  }
}

void cmd_sweep(const Options& opt, const std::string& path, const std::string& output) {
  const Scenario s = load(path);
  const std::vector<double> taus = s.temperature_list();
  if (taus.size() > 1 && output.empty()) {
    throw CLI::ValidationError("--output", "a temperature family needs an output path");
  }
  for (double tau : taus) {
    const std::vector<SweepRow> rows = run_sweep(s, tau, opt.config());
    recheck_rows(rows, tau);
    std::ostringstream csv;
    write_csv(csv, rows, opt.omega_rad_s);
    if (output.empty()) {
      std::cout << csv.str();
      continue;
    }
    const std::string target = taus.size() > 1 ? suffixed(output, tau) : output;
    write_file(target, csv.str());
    if (!opt.quiet) std::cerr << "wrote " << rows.size() << " rows to " << target << "\n";
  }
}

void cmd_asympt(const Options& opt, const std::string& path, double d, std::optional<double> tau) {
  const Scenario s = load(path);
  const double t = tau.value_or(s.temperature);
  const AsymptoticReport r =
      asymptotic_report(s.stack1(), s.stack2(), s.gap_medium(), d, t, opt.config());
  std::cout << "d=" << sci(d) << "\n"
            << "tau=" << sci(t) << "\n"
            << "c3_norm=" << (r.c3_norm ? sci(*r.c3_norm) : "unavailable") << "\n";
  if (r.c1_norm) std::cout << "c1_norm=" << sci(*r.c1_norm) << "\n";
  std::cout << "f_casimir=" << sci(r.f_casimir) << "\n"
            << "f_thermal=" << sci(r.f_thermal) << "\n"
            << "f_thermal_derived=" << sci(r.f_thermal_derived) << "\n"
            << "lambda_T=" << (t > 0.0 ? sci(r.lambda_T) : "inf") << "\n"
            << "regime=" << to_string(r.regime) << "\n";
  if (!r.note.empty()) std::cout << "note=" << r.note << "\n";
}

void cmd_preset(const Options& opt, const std::string& name, const std::string& output) {
  Scenario s;
  try {
    s = preset_scenario(name);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("NAME", e.what());
  }
  const std::string text = serialize_scenario(s);
  if (output.empty()) {
    std::cout << text;
    return;
  }
  write_file(output, text);
  if (!opt.quiet) std::cerr << "wrote preset " << name << " to " << output << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir pressure between planar magnetodielectric mirrors"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_option("--tol", opt.tol, "relative tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-matsubara", opt.max_matsubara, "Matsubara term budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--omega-rad-s", opt.omega_rad_s, "reference frequency Omega in rad/s; adds F_SI_Pa")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", opt.quiet, "suppress progress messages");
  app.add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1, 256));

  std::string scenario_path, output, preset_name;
  double d = 0.0;
  std::optional<double> tau;

  auto* force_cmd = app.add_subcommand("force", "pressure at one distance");
  force_cmd->add_option("scenario", scenario_path)->required();
  force_cmd->add_option("--d", d, "distance in units c/Omega")->required()->check(CLI::PositiveNumber);
  force_cmd->add_option("--T", tau, "temperature k_B T / hbar Omega")->check(CLI::NonNegativeNumber);

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV over the scenario's distance grid");
  sweep_cmd->add_option("scenario", scenario_path)->required();
  sweep_cmd->add_option("-o,--output", output, "CSV path (stdout if omitted)");

  auto* asympt_cmd = app.add_subcommand("asympt", "asymptotic coefficients and regime");
  asympt_cmd->add_option("scenario", scenario_path)->required();
  asympt_cmd->add_option("--d", d, "distance in units c/Omega")->required()->check(CLI::PositiveNumber);
  asympt_cmd->add_option("--T", tau, "temperature k_B T / hbar Omega")->check(CLI::NonNegativeNumber);

  auto* preset_cmd = app.add_subcommand("preset", "emit a named scenario file");
  preset_cmd->add_option("name", preset_name)->required();
  preset_cmd->add_option("-o,--output", output, "scenario path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*force_cmd) cmd_force(opt, scenario_path, d, tau);
    if (*sweep_cmd) cmd_sweep(opt, scenario_path, output);
    if (*asympt_cmd) cmd_asympt(opt, scenario_path, d, tau);
    if (*preset_cmd) cmd_preset(opt, preset_name, output);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << scenario_path << ": " << e.what() << "\n";
    return kParse;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << " (terms used " << e.terms_used()
              << ", last term " << e.last_term() << ")\n";
    return kConvergence;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {  // UnsupportedConfiguration
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
