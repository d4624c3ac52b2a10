#pragma once

#include "cavityswap/params.hpp"

namespace cavityswap {

/// Atom-continuum coupling g_mu(k) = lambda_mu sqrt(kappa/pi) e^{i theta_mu} / (k - k_c + i kappa).
cplx coupling_amplitude(double k, const SystemParams& p, Polarization pol);

/// V(k) = sqrt(|g_L(k)|^2 + |g_R(k)|^2). Zero for an uncoupled atom.
double interaction_strength(double k, const SystemParams& p);

/// Projection of a JointKState onto the bright vector (g_L*, g_R*)/V, the
/// orthogonal dark vector (g_R, -g_L)/V, and the two non-interacting states.
struct BrightDarkSplit {
  cplx bright;
  cplx dark;
  cplx trivial_LR;  // |L;k_R>
  cplx trivial_RL;  // |R;k_L>

  double norm_squared() const;
};

/// Throws SingularInputError when V(k) = 0.
BrightDarkSplit bright_dark_decompose(const JointKState& s, const SystemParams& p);

/// omega_pm = (d - i kappa)/2 +- sqrt((d + i kappa)^2/4 + Lambda), d = delta_e - i gamma.
RabiPoles rabi_poles(const SystemParams& p);

/// <e;0|G(k)|e;0> with G(k) = (k - H')^{-1}. Throws SingularInputError on a real pole.
cplx resolvent_ee(double k, const SystemParams& p);

/// Bright-state scattering factor e^{i delta_s(k)}. |.| = 1 without decay, <= 1 with.
cplx phase_factor(double k, const SystemParams& p);

/// Single-k input-output map on (|L;k_L>, |R;k_R>); identity on the other two states.
struct TransferMatrix {
  cplx t_LL{1.0, 0.0};
  cplx t_LR{0.0, 0.0};
  cplx t_RL{0.0, 0.0};
  cplx t_RR{1.0, 0.0};
  double k = 0.0;
  bool lossy = false;

  /// Singular values of the 2x2 block, largest first.
  std::array<double, 2> singular_values() const;
};

/// T = e^{i delta_s} P_bright + P_dark. Returns the identity block when V(k) = 0.
TransferMatrix transfer_matrix(double k, const SystemParams& p);

/// beta = T alpha; the free-evolution phase e^{-ikt} is omitted.
JointKState apply_scattering(const JointKState& s, const SystemParams& p);

}  // namespace cavityswap
