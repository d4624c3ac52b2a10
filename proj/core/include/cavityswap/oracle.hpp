#pragma once

#include <array>
#include <span>
#include <vector>

#include "cavityswap/params.hpp"
#include "cavityswap/spectra.hpp"

namespace cavityswap {

/// Uniform discretization of the continuum for the time-domain propagator.
struct OracleGrid {
  double k_min = -40.0;
  double k_max = 40.0;
  std::size_t n_modes = 4001;  // odd, so k_c is a grid point when centred
  double dt = 0.005;
  double t_final = 50.0;

  double spacing() const { return (k_max - k_min) / static_cast<double>(n_modes - 1); }
  double mode(std::size_t j) const { return k_min + spacing() * static_cast<double>(j); }

  static OracleGrid centered(double k_c, double half_span, std::size_t n_modes, double dt,
                             double t_final);
};

/// Structural checks throw ParameterError; a run longer than the grid recurrence
/// time pi/dk throws OracleError.
void validate_oracle_grid(const OracleGrid& g, double k_c);

/// One excited state coupled to a set of bath modes: the single-excitation
/// sector. Energies are measured from k_c (a frame rotating at the cavity
/// frequency), so the excited energy is delta_e - i gamma.
struct ArrowheadHamiltonian {
  cplx excited_energy{0.0, 0.0};
  std::vector<double> mode_energy;
  std::vector<cplx> coupling;  // <e|H|j>

  std::size_t dimension() const { return mode_energy.size() + 1; }
  /// Row-major dense matrix; index 0 is the excited state.
  std::vector<cplx> dense() const;
  /// out = H in, with the same index convention as dense().
  void apply(std::span<const cplx> in, std::span<cplx> out) const;
};

/// Bright-state model: modes |psi(k_j)> coupled with V(k_j) sqrt(dk).
ArrowheadHamiltonian build_hamiltonian(const SystemParams& p, const OracleGrid& g);

/// Both interacting channels: modes 0..N-1 are |L;k_L>, N..2N-1 are |R;k_R>,
/// coupled with g_L(k_j) sqrt(dk) and g_R(k_j) sqrt(dk).
ArrowheadHamiltonian build_two_channel_hamiltonian(const SystemParams& p, const OracleGrid& g);

struct OracleResult {
  std::vector<cplx> final_amplitudes;  // bath modes with e^{-i k_j t_final} divided out
  cplx final_excited{0.0, 0.0};
  std::vector<double> sample_times;
  std::vector<double> excited_population_history;
  std::vector<double> norm_history;
};

/// Fixed-step RK4 in the interaction picture of the real diagonal. `psi0`
/// holds the excited amplitude first, then the bath modes.
/// Throws OracleError on norm drift > 1e-6 for a Hermitian H.
OracleResult propagate(std::span<const cplx> psi0, const ArrowheadHamiltonian& h,
                       const OracleGrid& g);

/// Per-mode estimate of e^{i delta_s(k)} from scattering a bright-state packet.
struct OraclePhaseResult {
  std::vector<double> k;
  std::vector<cplx> ratio;
  std::vector<cplx> analytic;
  double max_abs_error = 0.0;
  double residual_excited_population = 0.0;
  double final_norm = 0.0;
};

/// Modes count as packet support when |f(k_j)| >= kSupportThreshold * max |f|.
inline constexpr double kSupportThreshold = 1e-3;

OraclePhaseResult oracle_phase(const SystemParams& p, const OracleGrid& g, const GaussianPacket& w);

/// Spectral amplitudes leaving in each channel after a packet f(k)(in_L|L;k_L> + in_R|R;k_R>).
struct ChannelScatter {
  std::vector<double> k;
  std::vector<cplx> f;
  std::vector<cplx> out_L;
  std::vector<cplx> out_R;
  double residual_excited_population = 0.0;
  double final_norm = 0.0;
};

ChannelScatter oracle_scatter(const SystemParams& p, const OracleGrid& g, const GaussianPacket& w,
                              cplx in_L, cplx in_R);

struct TransferCheckResult {
  std::vector<double> k;  // packet support
  std::vector<std::array<cplx, 4>> oracle;  // t_LL, t_LR, t_RL, t_RR
  double max_deviation = 0.0;
  std::array<double, 2> norm_deficit{};            // L input, R input
  std::array<double, 2> predicted_norm_deficit{};  // from |e^{i delta_s}| and the bright weights
};

/// Scatters |L;k_L> and |R;k_R> packets through the two-channel model and
/// compares the recovered 2x2 action with transfer_matrix() on the packet support.
TransferCheckResult oracle_transfer_check(const SystemParams& p, const OracleGrid& g,
                                          const GaussianPacket& w);

/// Packet used for oracle runs: centred on k_c, kappa_in = kappa/2, x_0 = 20/kappa.
GaussianPacket default_oracle_packet(const SystemParams& p);

/// +-40 kappa, 4001 modes, dt = kappa^{-1}/200, t_final = 2 x_0 + 10/kappa.
OracleGrid default_oracle_grid(const SystemParams& p, const GaussianPacket& w);

}  // namespace cavityswap
