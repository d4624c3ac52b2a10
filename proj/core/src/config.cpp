#include "cavityswap/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "json.hpp"

namespace cavityswap {

SystemParams params_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParameterError("config must be a JSON object");

  SystemParams p;
  const std::map<std::string, double SystemParams::*> fields = {
      {"k_c", &SystemParams::k_c},           {"delta_e", &SystemParams::delta_e},
      {"kappa", &SystemParams::kappa},       {"gamma", &SystemParams::gamma},
      {"lambda_L", &SystemParams::lambda_L}, {"lambda_R", &SystemParams::lambda_R},
      {"theta_L", &SystemParams::theta_L},   {"theta_R", &SystemParams::theta_R},
  };
  for (const auto& [key, value] : doc.items()) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw ParameterError("unknown config key '" + key + "'");
    if (!value.is_number()) throw ParameterError("config key '" + key + "' must be a number");
    p.*(it->second) = value.get<double>();
  }
  return validate_params(p);
}

SystemParams params_from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return params_from_json(buf.str());
}

}  // namespace cavityswap
