#include "run_config.hpp"

#include <algorithm>
#include <numbers>

#include "cavityswap/config.hpp"

namespace cavityswap::cli {

namespace {

double number(const nlohmann::json& s, const std::string& key, double fallback) {
  if (!s.contains(key)) return fallback;
  if (!s.at(key).is_number()) throw ParameterError("config key '" + key + "' must be a number");
  return s.at(key).get<double>();
}

std::size_t count(const nlohmann::json& s, const std::string& key, std::size_t fallback) {
  if (!s.contains(key)) return fallback;
  const auto& v = s.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParameterError("config key '" + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string text(const nlohmann::json& s, const std::string& key, std::string fallback) {
  if (!s.contains(key)) return fallback;
  if (!s.at(key).is_string()) throw ParameterError("config key '" + key + "' must be a string");
  return s.at(key).get<std::string>();
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "params", "k_c",    "delta_e", "kappa",   "gamma",  "lambda",  "lambda_L",  "lambda_R",
      "theta_L", "theta_R", "kin",   "format",  "output", "k_min",   "k_max",     "points",
      "lambdas", "n_modes", "span",  "dt",      "tolerance", "oracle_kin", "audit"};
  return keys;
}

RunConfig resolve_config(Command command, const nlohmann::json& settings) {
  if (!settings.is_object()) throw ParameterError("config must be a JSON object");
  for (const auto& [key, value] : settings.items()) {
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
      throw ParameterError("unknown config key '" + key + "'");
    }
  }

  RunConfig cfg;
  cfg.command = command;

  SystemParams p;
  const double default_lambda = command == Command::Oracle ? 3.0 : 10.0;
  if (settings.contains("params")) {
    p = params_from_json(settings.at("params").dump());
  } else {
    p.theta_L = std::numbers::pi;
    p.theta_R = 0.0;
  }
  p.kappa = number(settings, "kappa", p.kappa);
  if (!settings.contains("params") && !settings.contains("lambda") && !settings.contains("lambda_L") &&
      !settings.contains("lambda_R")) {
    p.lambda_L = p.lambda_R = default_lambda * p.kappa;
  }
  p.k_c = number(settings, "k_c", p.k_c);
  p.delta_e = number(settings, "delta_e", p.delta_e);
  p.gamma = number(settings, "gamma", p.gamma);
  if (settings.contains("lambda")) p.lambda_L = p.lambda_R = number(settings, "lambda", 0.0);
  p.lambda_L = number(settings, "lambda_L", p.lambda_L);
  p.lambda_R = number(settings, "lambda_R", p.lambda_R);
  p.theta_L = number(settings, "theta_L", p.theta_L);
  p.theta_R = number(settings, "theta_R", p.theta_R);
  cfg.params = validate_params(p);

  cfg.kappa_in = number(settings, "kin", 0.1 * p.kappa);
  if (!(cfg.kappa_in > 0.0)) throw ParameterError("kin must be positive");

  const std::string fmt = text(settings, "format", "csv");
  if (fmt == "csv") {
    cfg.format = OutputFormat::Csv;
  } else if (fmt == "json") {
    cfg.format = OutputFormat::Json;
  } else {
    throw ParameterError("format must be 'csv' or 'json'");
  }
  cfg.output = text(settings, "output", "");

  cfg.k_min = number(settings, "k_min", p.k_c - 20.0 * p.kappa);
  cfg.k_max = number(settings, "k_max", p.k_c + 20.0 * p.kappa);
  cfg.points = count(settings, "points", 401);
  if (command == Command::Phase) {
    if (!(cfg.k_min < cfg.k_max)) throw ParameterError("k_min must be below k_max");
    if (cfg.points < 2) throw ParameterError("points must be at least 2");
  }

  if (settings.contains("lambdas")) {
    const auto& v = settings.at("lambdas");
    if (!v.is_array()) throw ParameterError("config key 'lambdas' must be an array of numbers");
    for (const auto& x : v) {
      if (!x.is_number()) throw ParameterError("config key 'lambdas' must be an array of numbers");
      cfg.lambdas.push_back(x.get<double>());
    }
  } else {
    for (int i = 2; i <= 10; ++i) cfg.lambdas.push_back(i);
  }

  cfg.n_modes = count(settings, "n_modes", 4001);
  cfg.span = number(settings, "span", 40.0 * p.kappa);
  cfg.dt = number(settings, "dt", 0.005 / p.kappa);
  cfg.tolerance = number(settings, "tolerance", 1e-3);
  if (settings.contains("oracle_kin")) cfg.oracle_kappa_in = number(settings, "oracle_kin", 0.0);
  cfg.audit = text(settings, "audit", "");
  if (command == Command::Oracle && !(cfg.tolerance > 0.0)) {
    throw ParameterError("tolerance must be positive");
  }
  return cfg;
}

}  // namespace cavityswap::cli
