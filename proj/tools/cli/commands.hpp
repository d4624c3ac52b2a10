#pragma once

#include <iosfwd>

#include "json.hpp"
#include "run_config.hpp"

namespace cavityswap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerification = 3;

/// Rows `k,re_phase,im_phase,abs_phase` on an ascending k grid.
int cmd_phase(const RunConfig& cfg, std::ostream& out);
/// JSON {roots, detunings, method, F_min, xi, packet, warnings}.
int cmd_swap(const RunConfig& cfg, std::ostream& out);
/// JSON {points, P, xi, packet, warnings}; the packet sits at k_c + kappa.
int cmd_entangle(const RunConfig& cfg, std::ostream& out);
/// CSV `lambda_over_kappa,F_min,P`.
int cmd_fig2(const RunConfig& cfg, std::ostream& out);
/// Summary JSON {max_abs_error, ...}; optional audit CSV
/// `k,re_ratio,im_ratio,re_analytic,im_analytic,abs_error`. Exit 3 above tolerance.
int cmd_oracle(const RunConfig& cfg, std::ostream& out);

/// Resolves the config, runs the command and maps failures onto exit codes
/// (2 config error, 3 verification failure). Diagnostics go to `err`.
int dispatch(Command command, const nlohmann::json& settings, std::ostream& out, std::ostream& err);

}  // namespace cavityswap::cli
