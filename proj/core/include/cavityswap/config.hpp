#pragma once

#include <filesystem>
#include <string_view>

#include "cavityswap/params.hpp"

namespace cavityswap {

/// Reads SystemParams from a JSON object whose keys are the field names
/// (k_c, delta_e, kappa, gamma, lambda_L, lambda_R, theta_L, theta_R).
/// Missing keys keep their defaults; without "kappa" the unit is kappa = 1.
/// Unknown keys and non-numeric values throw ParameterError.
SystemParams params_from_json(std::string_view text);
SystemParams params_from_json_file(const std::filesystem::path& path);

}  // namespace cavityswap
