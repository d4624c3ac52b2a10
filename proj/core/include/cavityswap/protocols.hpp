#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cavityswap/params.hpp"
#include "cavityswap/spectra.hpp"

namespace cavityswap {

enum class RootMethod { ExactCubic, NumericMinimization };

/// Frequencies where the bright state picks up a pi phase (t_LL = 0 without loss).
struct SwapRoots {
  std::vector<double> roots;  // absolute k, ascending, repeated roots listed with multiplicity
  RootMethod method = RootMethod::ExactCubic;
  bool complex_pair_omitted = false;
  std::vector<std::string> warnings;
};

/// Frequency where |t_LL| = |t_RL|: a |L,k_L> input leaves as a Bell pair.
struct EntanglePoint {
  double k = 0.0;
  double theta = 0.0;  // arg(t_RL / t_LL), in (-pi, pi]
  double balance_residual = 0.0;
};

struct EntangleSearch {
  std::vector<EntanglePoint> points;
  std::vector<std::string> warnings;
};

struct FigureOfMerit {
  double value = 0.0;
  cplx xi{0.0, 0.0};
  double eta = 1.0;
};

/// eta = |A_L C_L - A_R C_R|^2, the weight of the input on the interacting sector.
double eta_overlap(const AtomQubit& a, const PolarizationQubit& c);

/// F = 1 - 2 Re(xi) eta + |xi|^2 eta^2.
double fidelity_from(cplx xi, double eta);

/// P = 1/2 + |xi|^2 - Re(xi) + Im(xi).
double bell_probability_from(cplx xi);

/// Real roots of the cubic that makes e^{i delta_s} = -1 when gamma = 0; with
/// loss, local minimizers of |t_LL| found by golden-section search seeded at
/// the lossless roots. Requires lambda_L = lambda_R.
SwapRoots swap_frequencies(const SystemParams& p);

/// Swap fidelity of (A_L|L> + A_R|R>) (x) f(k)(C_L|k_L> + C_R|k_R>).
FigureOfMerit swap_fidelity(const AtomQubit& a, const PolarizationQubit& c, const Wavepacket& w,
                            const SystemParams& p);

/// |1 - xi|^2, the worst case over qubit inputs (eta = 1).
FigureOfMerit min_swap_fidelity(const Wavepacket& w, const SystemParams& p);

/// Magnitude-balance roots bracketed in [kappa/4, 4 kappa] on either side of k_c.
EntangleSearch entangle_frequencies(const SystemParams& p);

/// Overlap of the scattered |L> (x) f|k_L> with (|L,k_L> - i|R,k_R>)/sqrt(2).
FigureOfMerit bell_probability(const Wavepacket& w, const SystemParams& p);

struct Fig2Row {
  double lambda_over_kappa = 0.0;
  double F_min = 0.0;
  double P = 0.0;
};

/// For each lambda/kappa: F_min with a Gaussian at k_c, P with the same Gaussian
/// moved to k_c + kappa. `base` supplies k_c, delta_e and kappa; rows follow input order.
std::vector<Fig2Row> sweep_fig2(std::span<const double> lambda_over_kappa, double gamma,
                                double kappa_in, const SystemParams& base);

void write_fig2_csv(std::ostream& out, std::span<const Fig2Row> rows);

}  // namespace cavityswap
