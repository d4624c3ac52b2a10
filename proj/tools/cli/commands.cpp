#include "commands.hpp"

#include <fstream>
#include <ostream>

#include "cavityswap/format.hpp"
#include "cavityswap/oracle.hpp"
#include "cavityswap/protocols.hpp"
#include "cavityswap/scattering.hpp"

namespace cavityswap::cli {

namespace {

using nlohmann::json;

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json packet_json(const GaussianPacket& g) {
  return json{{"k_peak", g.k_peak}, {"kappa_in", g.kappa_in}, {"x_0", g.x_0}};
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int cmd_phase(const RunConfig& cfg, std::ostream& out) {
  const SystemParams& p = cfg.params;
  json rows = json::array();
  if (cfg.format == OutputFormat::Csv) out << "k,re_phase,im_phase,abs_phase\n";
  for (std::size_t i = 0; i < cfg.points; ++i) {
    const double k = cfg.k_min + (cfg.k_max - cfg.k_min) * static_cast<double>(i) /
                                     static_cast<double>(cfg.points - 1);
    const cplx e = phase_factor(k, p);
    if (cfg.format == OutputFormat::Csv) {
      out << format_double(k) << ',' << format_double(e.real()) << ',' << format_double(e.imag())
          << ',' << format_double(std::abs(e)) << '\n';
    } else {
      rows.push_back({{"k", k}, {"re_phase", e.real()}, {"im_phase", e.imag()}, {"abs_phase", std::abs(e)}});
    }
  }
  if (cfg.format == OutputFormat::Json) write_json(out, json{{"rows", rows}});
  return kExitOk;
}

int cmd_swap(const RunConfig& cfg, std::ostream& out) {
  const SystemParams& p = cfg.params;
  const SwapRoots roots = swap_frequencies(p);
  const GaussianPacket packet{p.k_c, cfg.kappa_in, 0.0};
  const FigureOfMerit f = min_swap_fidelity(packet, p);

  json detunings = json::array();
  for (double k : roots.roots) detunings.push_back(k - p.k_c);
  write_json(out, json{
                      {"roots", roots.roots},
                      {"detunings", detunings},
                      {"method", roots.method == RootMethod::ExactCubic ? "exact-cubic"
                                                                         : "numeric-minimization"},
                      {"complex_pair_omitted", roots.complex_pair_omitted},
                      {"F_min", f.value},
                      {"xi", complex_json(f.xi)},
                      {"packet", packet_json(packet)},
                      {"warnings", roots.warnings},
                  });
  return kExitOk;
}

int cmd_entangle(const RunConfig& cfg, std::ostream& out) {
  const SystemParams& p = cfg.params;
  const EntangleSearch search = entangle_frequencies(p);
  const GaussianPacket packet{p.k_c + p.kappa, cfg.kappa_in, 0.0};
  const FigureOfMerit prob = bell_probability(packet, p);

  json points = json::array();
  for (const auto& pt : search.points) {
    points.push_back({{"k", pt.k},
                      {"detuning", pt.k - p.k_c},
                      {"theta", pt.theta},
                      {"balance_residual", pt.balance_residual}});
  }
  write_json(out, json{{"points", points},
                       {"P", prob.value},
                       {"xi", complex_json(prob.xi)},
                       {"packet", packet_json(packet)},
                       {"warnings", search.warnings}});
  return kExitOk;
}

int cmd_fig2(const RunConfig& cfg, std::ostream& out) {
  const auto rows = sweep_fig2(cfg.lambdas, cfg.params.gamma, cfg.kappa_in, cfg.params);
  if (cfg.format == OutputFormat::Csv) {
    write_fig2_csv(out, rows);
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"lambda_over_kappa", r.lambda_over_kappa}, {"F_min", r.F_min}, {"P", r.P}});
    }
    write_json(out, json{{"rows", arr}});
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const SystemParams& p = cfg.params;
  GaussianPacket packet = default_oracle_packet(p);
  if (cfg.oracle_kappa_in) {
    packet.kappa_in = *cfg.oracle_kappa_in;
    packet.x_0 = std::max(5.0 / packet.kappa_in, 20.0 / p.kappa);
  }
  OracleGrid grid = default_oracle_grid(p, packet);
  grid = OracleGrid::centered(p.k_c, cfg.span, cfg.n_modes, cfg.dt, grid.t_final);

  const OraclePhaseResult phase = oracle_phase(p, grid, packet);
  const TransferCheckResult transfer = oracle_transfer_check(p, grid, packet);

  if (!cfg.audit.empty()) {
    std::ofstream audit(cfg.audit);
    if (!audit) throw ParameterError("cannot open audit file " + cfg.audit);
    audit << "k,re_ratio,im_ratio,re_analytic,im_analytic,abs_error\n";
    for (std::size_t i = 0; i < phase.k.size(); ++i) {
      audit << format_double(phase.k[i]) << ',' << format_double(phase.ratio[i].real()) << ','
            << format_double(phase.ratio[i].imag()) << ',' << format_double(phase.analytic[i].real())
            << ',' << format_double(phase.analytic[i].imag()) << ','
            << format_double(std::abs(phase.ratio[i] - phase.analytic[i])) << '\n';
    }
  }

  const double max_err = std::max(phase.max_abs_error, transfer.max_deviation);
  const bool passed = max_err <= cfg.tolerance;
  write_json(out, json{{"max_abs_error", max_err},
                       {"phase_max_abs_error", phase.max_abs_error},
                       {"transfer_max_deviation", transfer.max_deviation},
                       {"residual_excited_population", phase.residual_excited_population},
                       {"norm_deficit", transfer.norm_deficit},
                       {"predicted_norm_deficit", transfer.predicted_norm_deficit},
                       {"tolerance", cfg.tolerance},
                       {"n_modes", grid.n_modes},
                       {"span", cfg.span},
                       {"dt", grid.dt},
                       {"t_final", grid.t_final},
                       {"packet", packet_json(packet)},
                       {"passed", passed}});
  return passed ? kExitOk : kExitVerification;
}

int dispatch(Command command, const nlohmann::json& settings, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = resolve_config(command, settings);
    std::ofstream file;
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw ParameterError("cannot open output file " + cfg.output);
    }
    std::ostream& sink = cfg.output.empty() ? out : file;
    switch (command) {
      case Command::Phase: return cmd_phase(cfg, sink);
      case Command::Swap: return cmd_swap(cfg, sink);
      case Command::Entangle: return cmd_entangle(cfg, sink);
      case Command::Fig2: return cmd_fig2(cfg, sink);
      case Command::Oracle: return cmd_oracle(cfg, sink);
    }
    return kExitConfig;
  } catch (const ParameterError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const OracleError& e) {
    err << "verification failure: " << e.what() << '\n';
    out << json{{"error", e.what()}, {"passed", false}}.dump(2) << '\n';
    return kExitVerification;
  } catch (const QuadratureError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const SingularInputError& e) {
    err << "singular input: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace cavityswap::cli
