#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cavityswap/params.hpp"
#include "json.hpp"

namespace cavityswap::cli {

enum class Command { Phase, Swap, Entangle, Fig2, Oracle };
enum class OutputFormat { Csv, Json };

/// Everything one invocation needs, resolved from a JSON config plus flag overrides.
struct RunConfig {
  Command command = Command::Phase;
  SystemParams params;
  double kappa_in = 0.1;
  OutputFormat format = OutputFormat::Csv;
  std::string output;  // empty: stdout

  // phase
  double k_min = -20.0;
  double k_max = 20.0;
  std::size_t points = 401;

  // fig2
  std::vector<double> lambdas;

  // oracle
  std::size_t n_modes = 4001;
  double span = 40.0;
  double dt = 0.005;
  double tolerance = 1e-3;
  std::optional<double> oracle_kappa_in;
  std::string audit;
};

/// Keys accepted in a config file (and produced by flag overrides).
const std::vector<std::string>& known_keys();

/// Throws ParameterError naming the offending key. Rates are absolute numbers;
/// kappa defaults to 1. Without explicit couplings the swap configuration
/// (theta_L - theta_R = pi) is used with lambda = 10 kappa (3 kappa for oracle).
RunConfig resolve_config(Command command, const nlohmann::json& settings);

}  // namespace cavityswap::cli
