#include "cavityswap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cavityswap/format.hpp"
#include "cavityswap/scattering.hpp"

namespace cavityswap {

namespace {

constexpr double kDriftLimit = 1e-6;
constexpr double kResidualPopulationLimit = 1e-4;
constexpr double kEdgeAmplitudeLimit = 1e-8;
constexpr std::size_t kHistorySamples = 400;

void check_packet_setup(const SystemParams& p, const OracleGrid& g, const GaussianPacket& w) {
  if (!(w.kappa_in > 0.0)) throw ParameterError("kappa_in must be positive");
  if (w.x_0 < 5.0 / w.kappa_in) {
    throw OracleError("x_0 must be at least 5/kappa_in so the packet starts outside the cavity");
  }
  if (g.t_final < 2.0 * w.x_0 + 10.0 / p.kappa) {
    throw OracleError("t_final must be at least 2 x_0 + 10/kappa for scattering to complete");
  }
  const double edge = std::max(std::abs(w.amplitude(g.k_min)), std::abs(w.amplitude(g.k_max)));
  if (edge >= kEdgeAmplitudeLimit) {
    throw OracleError("packet leaks off the grid (|f| at the edge = " + format_double(edge) + ")");
  }
}

std::vector<std::size_t> support_of(const std::vector<cplx>& f) {
  double peak = 0.0;
  for (const auto& v : f) peak = std::max(peak, std::abs(v));
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (std::abs(f[j]) >= kSupportThreshold * peak) idx.push_back(j);
  }
  return idx;
}

}  // namespace

OracleGrid OracleGrid::centered(double k_c, double half_span, std::size_t n_modes, double dt,
                                double t_final) {
  return OracleGrid{k_c - half_span, k_c + half_span, n_modes, dt, t_final};
}

void validate_oracle_grid(const OracleGrid& g, double k_c) {
  if (!(g.k_min < k_c && k_c < g.k_max)) throw ParameterError("grid must satisfy k_min < k_c < k_max");
  if (g.n_modes < 3) throw ParameterError("grid needs at least three modes");
  if (g.n_modes % 2 == 0) throw ParameterError("n_modes must be odd");
  if (!(g.dt > 0.0)) throw ParameterError("dt must be positive");
  if (!(g.t_final > 0.0)) throw ParameterError("t_final must be positive");
  if (g.dt > g.t_final) throw ParameterError("dt must not exceed t_final");
  if (!(g.spacing() * g.t_final < std::numbers::pi)) {
    throw OracleError("grid recurrence: dk * t_final = " + format_double(g.spacing() * g.t_final) +
                      " must stay below pi");
  }
}

std::vector<cplx> ArrowheadHamiltonian::dense() const {
  const std::size_t n = dimension();
  std::vector<cplx> m(n * n, cplx{0.0, 0.0});
  m[0] = excited_energy;
  for (std::size_t j = 0; j < mode_energy.size(); ++j) {
    m[(j + 1) * n + (j + 1)] = mode_energy[j];
    m[j + 1] = coupling[j];
    m[(j + 1) * n] = std::conj(coupling[j]);
  }
  return m;
}

void ArrowheadHamiltonian::apply(std::span<const cplx> in, std::span<cplx> out) const {
  cplx e = excited_energy * in[0];
  for (std::size_t j = 0; j < mode_energy.size(); ++j) {
    e += coupling[j] * in[j + 1];
    out[j + 1] = mode_energy[j] * in[j + 1] + std::conj(coupling[j]) * in[0];
  }
  out[0] = e;
}

ArrowheadHamiltonian build_hamiltonian(const SystemParams& p, const OracleGrid& g) {
  validate_params(p);
  validate_oracle_grid(g, p.k_c);
  ArrowheadHamiltonian h;
  h.excited_energy = p.lossy_detuning();
  h.mode_energy.resize(g.n_modes);
  h.coupling.resize(g.n_modes);
  const double root_dk = std::sqrt(g.spacing());
  for (std::size_t j = 0; j < g.n_modes; ++j) {
    const double k = g.mode(j);
    h.mode_energy[j] = k - p.k_c;
    h.coupling[j] = interaction_strength(k, p) * root_dk;
  }
  return h;
}

ArrowheadHamiltonian build_two_channel_hamiltonian(const SystemParams& p, const OracleGrid& g) {
  validate_params(p);
  validate_oracle_grid(g, p.k_c);
  const std::size_t n = g.n_modes;
  ArrowheadHamiltonian h;
  h.excited_energy = p.lossy_detuning();
  h.mode_energy.resize(2 * n);
  h.coupling.resize(2 * n);
  const double root_dk = std::sqrt(g.spacing());
  for (std::size_t j = 0; j < n; ++j) {
    const double k = g.mode(j);
    h.mode_energy[j] = k - p.k_c;
    h.mode_energy[n + j] = k - p.k_c;
    h.coupling[j] = coupling_amplitude(k, p, Polarization::L) * root_dk;
    h.coupling[n + j] = coupling_amplitude(k, p, Polarization::R) * root_dk;
  }
  return h;
}

OracleResult propagate(std::span<const cplx> psi0, const ArrowheadHamiltonian& h,
                       const OracleGrid& g) {
  const std::size_t m = h.mode_energy.size();
  if (psi0.size() != m + 1) throw ParameterError("initial state dimension does not match H");
  if (!(g.dt > 0.0) || !(g.t_final > 0.0)) throw ParameterError("dt and t_final must be positive");

  const auto steps = static_cast<std::size_t>(std::max(1.0, std::round(g.t_final / g.dt)));
  const double dt = g.t_final / static_cast<double>(steps);
  const double e_re = h.excited_energy.real();
  const double decay = -h.excited_energy.imag();
  const bool hermitian = decay == 0.0;

  // Interaction picture: c_j = e^{i E_j t} a_j, c_e = e^{i Re(E_e) t} b. The
  // couplings then carry phasors e^{i (E_j - Re E_e) t}.
  std::vector<double> omega(m);
  std::vector<cplx> half_turn(m);
  for (std::size_t j = 0; j < m; ++j) {
    omega[j] = h.mode_energy[j] - e_re;
    half_turn[j] = std::polar(1.0, 0.5 * omega[j] * dt);
  }
  // w_j(t) = conj(G_j) u_j(t), tabulated at t, t + dt/2 and t + dt each step.
  std::vector<cplx> w_now(m), w_half(m), w_next(m);
  auto reset_weights = [&](double t) {
    for (std::size_t j = 0; j < m; ++j) w_now[j] = std::conj(h.coupling[j]) * std::polar(1.0, omega[j] * t);
  };
  reset_weights(0.0);

  std::vector<cplx> c(psi0.begin() + 1, psi0.end());
  cplx ce = psi0[0];

  // d c_j/dt = -i w_j c_e ;  d c_e/dt = -decay c_e - i sum_j conj(w_j) c_j
  auto excited_rate = [&](const std::vector<cplx>& w, const std::vector<cplx>& modes, cplx e) {
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) s += std::conj(w[j]) * modes[j];
    return -decay * e - cplx(0.0, 1.0) * s;
  };
  std::vector<cplx> stage(m);
  OracleResult res;
  const std::size_t stride = std::max<std::size_t>(1, steps / kHistorySamples);
  auto record = [&](double t) {
    double norm = std::norm(ce);
    for (const auto& v : c) norm += std::norm(v);
    res.sample_times.push_back(t);
    res.excited_population_history.push_back(std::norm(ce));
    res.norm_history.push_back(norm);
  };
  record(0.0);
  const double norm0 = res.norm_history.front();

  for (std::size_t s = 0; s < steps; ++s) {
    const double t = dt * static_cast<double>(s);
    if (s % 256 == 0) reset_weights(t);
    for (std::size_t j = 0; j < m; ++j) {
      w_half[j] = w_now[j] * half_turn[j];
      w_next[j] = w_half[j] * half_turn[j];
    }

    const cplx m1 = cplx(0.0, -1.0) * ce;
    const cplx e1 = excited_rate(w_now, c, ce);
    for (std::size_t j = 0; j < m; ++j) stage[j] = c[j] + 0.5 * dt * m1 * w_now[j];

    const cplx ce2 = ce + 0.5 * dt * e1;
    const cplx m2 = cplx(0.0, -1.0) * ce2;
    const cplx e2 = excited_rate(w_half, stage, ce2);
    for (std::size_t j = 0; j < m; ++j) stage[j] = c[j] + 0.5 * dt * m2 * w_half[j];

    const cplx ce3 = ce + 0.5 * dt * e2;
    const cplx m3 = cplx(0.0, -1.0) * ce3;
    const cplx e3 = excited_rate(w_half, stage, ce3);
    for (std::size_t j = 0; j < m; ++j) stage[j] = c[j] + dt * m3 * w_half[j];

    const cplx ce4 = ce + dt * e3;
    const cplx m4 = cplx(0.0, -1.0) * ce4;
    const cplx e4 = excited_rate(w_next, stage, ce4);
    // Mode rates are rank one, so the RK4 combination collapses to three weight vectors.
    for (std::size_t j = 0; j < m; ++j) {
      c[j] += dt / 6.0 * (m1 * w_now[j] + 2.0 * (m2 + m3) * w_half[j] + m4 * w_next[j]);
    }
    ce += dt / 6.0 * (e1 + 2.0 * e2 + 2.0 * e3 + e4);
    std::swap(w_now, w_next);

    if ((s + 1) % stride == 0 || s + 1 == steps) {
      record(dt * static_cast<double>(s + 1));
      if (hermitian && std::abs(res.norm_history.back() - norm0) > kDriftLimit) {
        throw OracleError("norm drift " + format_double(res.norm_history.back() - norm0) +
                          " exceeds 1e-6: reduce dt");
      }
    }
  }

  res.final_amplitudes = std::move(c);
  // Back to the Schroedinger picture for the excited state only.
  res.final_excited = ce * std::polar(1.0, -e_re * g.t_final);
  return res;
}

OraclePhaseResult oracle_phase(const SystemParams& p, const OracleGrid& g, const GaussianPacket& w) {
  validate_params(p);
  validate_oracle_grid(g, p.k_c);
  check_packet_setup(p, g, w);

  const ArrowheadHamiltonian h = build_hamiltonian(p, g);
  const double root_dk = std::sqrt(g.spacing());
  std::vector<cplx> f(g.n_modes);
  std::vector<cplx> psi0(g.n_modes + 1, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < g.n_modes; ++j) {
    f[j] = w.amplitude(g.mode(j));
    psi0[j + 1] = f[j] * root_dk;
  }
  const OracleResult run = propagate(psi0, h, g);

  OraclePhaseResult out;
  out.residual_excited_population = std::norm(run.final_excited);
  out.final_norm = run.norm_history.back();
  if (out.residual_excited_population > kResidualPopulationLimit) {
    throw OracleError("scattering incomplete: residual excited population " +
                      format_double(out.residual_excited_population));
  }
  for (std::size_t j : support_of(f)) {
    const double k = g.mode(j);
    const cplx ratio = run.final_amplitudes[j] / psi0[j + 1];
    const cplx exact = phase_factor(k, p);
    out.k.push_back(k);
    out.ratio.push_back(ratio);
    out.analytic.push_back(exact);
    out.max_abs_error = std::max(out.max_abs_error, std::abs(ratio - exact));
  }
  return out;
}

ChannelScatter oracle_scatter(const SystemParams& p, const OracleGrid& g, const GaussianPacket& w,
                              cplx in_L, cplx in_R) {
  validate_params(p);
  validate_oracle_grid(g, p.k_c);
  check_packet_setup(p, g, w);

  const std::size_t n = g.n_modes;
  const ArrowheadHamiltonian h = build_two_channel_hamiltonian(p, g);
  const double root_dk = std::sqrt(g.spacing());
  ChannelScatter out;
  out.k.resize(n);
  out.f.resize(n);
  std::vector<cplx> psi0(2 * n + 1, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    out.k[j] = g.mode(j);
    out.f[j] = w.amplitude(out.k[j]);
    psi0[j + 1] = in_L * out.f[j] * root_dk;
    psi0[n + j + 1] = in_R * out.f[j] * root_dk;
  }
  const OracleResult run = propagate(psi0, h, g);
  out.residual_excited_population = std::norm(run.final_excited);
  out.final_norm = run.norm_history.back();
  if (out.residual_excited_population > kResidualPopulationLimit) {
    throw OracleError("scattering incomplete: residual excited population " +
                      format_double(out.residual_excited_population));
  }
  out.out_L.resize(n);
  out.out_R.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.out_L[j] = run.final_amplitudes[j] / root_dk;
    out.out_R[j] = run.final_amplitudes[n + j] / root_dk;
  }
  return out;
}

TransferCheckResult oracle_transfer_check(const SystemParams& p, const OracleGrid& g,
                                          const GaussianPacket& w) {
  const ChannelScatter from_L = oracle_scatter(p, g, w, 1.0, 0.0);
  const ChannelScatter from_R = oracle_scatter(p, g, w, 0.0, 1.0);

  TransferCheckResult out;
  out.norm_deficit = {1.0 - from_L.final_norm, 1.0 - from_R.final_norm};

  // Lost probability: |bright fraction| x (1 - |e^{i delta_s}|^2), summed over the packet.
  const double lam = p.coupling_sum();
  const double wL = lam > 0.0 ? p.lambda_L * p.lambda_L / lam : 0.0;
  const double wR = lam > 0.0 ? p.lambda_R * p.lambda_R / lam : 0.0;
  const double dk = g.spacing();
  for (std::size_t j = 0; j < from_L.k.size(); ++j) {
    const double loss = (1.0 - std::norm(phase_factor(from_L.k[j], p))) * std::norm(from_L.f[j]) * dk;
    out.predicted_norm_deficit[0] += wL * loss;
    out.predicted_norm_deficit[1] += wR * loss;
  }

  for (std::size_t j : support_of(from_L.f)) {
    const double k = from_L.k[j];
    const cplx f = from_L.f[j];
    const std::array<cplx, 4> est = {from_L.out_L[j] / f, from_R.out_L[j] / f, from_L.out_R[j] / f,
                                     from_R.out_R[j] / f};
    const TransferMatrix t = transfer_matrix(k, p);
    const std::array<cplx, 4> exact = {t.t_LL, t.t_LR, t.t_RL, t.t_RR};
    for (std::size_t i = 0; i < 4; ++i) {
      out.max_deviation = std::max(out.max_deviation, std::abs(est[i] - exact[i]));
    }
    out.k.push_back(k);
    out.oracle.push_back(est);
  }
  return out;
}

GaussianPacket default_oracle_packet(const SystemParams& p) {
  return GaussianPacket{p.k_c, 0.5 * p.kappa, 20.0 / p.kappa};
}

OracleGrid default_oracle_grid(const SystemParams& p, const GaussianPacket& w) {
  return OracleGrid::centered(p.k_c, 40.0 * p.kappa, 4001, 0.005 / p.kappa,
                              2.0 * w.x_0 + 10.0 / p.kappa);
}

}  // namespace cavityswap
