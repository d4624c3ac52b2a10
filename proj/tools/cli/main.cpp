#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using cavityswap::cli::Command;

struct Flags {
  std::string config;
  std::map<std::string, double> numbers;
  std::map<std::string, std::size_t> counts;
  std::map<std::string, std::string> texts;
  std::vector<double> lambdas;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON config file")->check(CLI::ExistingFile);
  const std::vector<std::pair<std::string, std::string>> numeric = {
      {"lambda", "coupling strength lambda_L = lambda_R"},
      {"lambda_L", "coupling strength of the L transition"},
      {"lambda_R", "coupling strength of the R transition"},
      {"theta_L", "dipole phase of the L transition"},
      {"theta_R", "dipole phase of the R transition"},
      {"gamma", "spontaneous decay rate"},
      {"delta_e", "atom-cavity detuning omega_e - k_c"},
      {"kappa", "cavity leakage rate (unit of all rates, default 1)"},
      {"k_c", "cavity resonance"},
      {"kin", "spectral width kappa_in of the Gaussian packet"},
  };
  for (const auto& [key, help] : numeric) {
    std::string flag = "--" + key;
    for (char& c : flag) {
      if (c == '_') c = '-';
    }
    sub->add_option(flag, f.numbers[key], help);
  }
  sub->add_option("--output", f.texts["output"], "output path (default stdout)");
  sub->add_option("--format", f.texts["format"], "csv or json");
}

nlohmann::json settings_from(const CLI::App* sub, const Flags& f) {
  nlohmann::json s = nlohmann::json::object();
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    std::stringstream buf;
    buf << in.rdbuf();
    s = nlohmann::json::parse(buf.str());
  }
  for (const auto* opt : sub->get_options()) {
    if (opt->count() == 0) continue;
    std::string key = opt->get_name(false, true);
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    for (char& c : key) {
      if (c == '-') c = '_';
    }
    if (key == "config" || key == "help") continue;
    if (f.numbers.count(key)) {
      s[key] = f.numbers.at(key);
    } else if (f.counts.count(key)) {
      s[key] = f.counts.at(key);
    } else if (f.texts.count(key)) {
      s[key] = f.texts.at(key);
    } else if (key == "lambdas") {
      s[key] = f.lambdas;
    }
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-photon scattering off a Lambda atom in a one-sided cavity"};
  app.require_subcommand(1);
  Flags f;

  auto* phase = app.add_subcommand("phase", "Bright-state phase factor over a k grid (CSV)");
  add_common(phase, f);
  phase->add_option("--k-min", f.numbers["k_min"], "grid start");
  phase->add_option("--k-max", f.numbers["k_max"], "grid end");
  phase->add_option("--points", f.counts["points"], "number of grid points");

  auto* swap = app.add_subcommand("swap", "Swap frequencies and minimum swap fidelity (JSON)");
  add_common(swap, f);

  auto* entangle = app.add_subcommand("entangle", "Entangling frequencies and Bell probability (JSON)");
  add_common(entangle, f);

  auto* fig2 = app.add_subcommand("fig2", "F_min and P versus lambda/kappa (CSV)");
  add_common(fig2, f);
  fig2->add_option("--lambdas", f.lambdas, "ascending lambda/kappa values")->delimiter(',');

  auto* oracle = app.add_subcommand("oracle", "Time-domain check of the closed forms (JSON + audit CSV)");
  add_common(oracle, f);
  oracle->add_option("--n-modes", f.counts["n_modes"], "odd number of continuum modes");
  oracle->add_option("--span", f.numbers["span"], "grid half-span around k_c");
  oracle->add_option("--dt", f.numbers["dt"], "integrator step");
  oracle->add_option("--tolerance", f.numbers["tolerance"], "maximum accepted deviation");
  oracle->add_option("--oracle-kin", f.numbers["oracle_kin"], "spectral width of the probe packet");
  oracle->add_option("--audit", f.texts["audit"], "write the per-mode audit CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cavityswap::cli::kExitConfig;
  }

  const std::pair<CLI::App*, Command> table[] = {{phase, Command::Phase},
                                                  {swap, Command::Swap},
                                                  {entangle, Command::Entangle},
                                                  {fig2, Command::Fig2},
                                                  {oracle, Command::Oracle}};
  for (const auto& [sub, command] : table) {
    if (!sub->parsed()) continue;
    nlohmann::json settings;
    try {
      settings = settings_from(sub, f);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return cavityswap::cli::kExitConfig;
    }
    return cavityswap::cli::dispatch(command, settings, std::cout, std::cerr);
  }
  return cavityswap::cli::kExitConfig;
}
