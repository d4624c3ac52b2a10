#pragma once

#include <array>
#include <complex>

#include "cavityswap/errors.hpp"

namespace cavityswap {

using cplx = std::complex<double>;

enum class Polarization { L, R };

/// Atom + cavity parameters. All rates share one unit; the canonical choice
/// is kappa = 1. Only k - k_c enters the scattering formulas.
struct SystemParams {
  double k_c = 0.0;
  double delta_e = 0.0;  // omega_e - k_c
  double kappa = 1.0;
  double gamma = 0.0;
  double lambda_L = 0.0;
  double lambda_R = 0.0;
  double theta_L = 0.0;
  double theta_R = 0.0;

  double detuning(double k) const { return k - k_c; }
  /// lambda_L^2 + lambda_R^2
  double coupling_sum() const { return lambda_L * lambda_L + lambda_R * lambda_R; }
  /// Atomic detuning with spontaneous decay folded in: delta_e - i gamma.
  cplx lossy_detuning() const { return {delta_e, -gamma}; }
  bool lossy() const { return gamma > 0.0; }

  /// Multiply every rate and frequency by `s`. Phases are untouched.
  SystemParams scaled(double s) const;
};

/// Returns `p` unchanged, or throws ParameterError naming the violated field.
SystemParams validate_params(const SystemParams& p);

/// Partially transparent output mirror of a one-sided cavity.
struct MirrorSpec {
  double r = 1.0;  // amplitude reflection coefficient (magnitude used)
  double l = 1.0;  // cavity length, c = 1
};

/// Leakage rate -ln|r| / (2 l).
double kappa_from_mirror(const MirrorSpec& m);

/// Equal coupling with opposite dipole phases, so g_L(k) = -g_R(k).
SystemParams swap_configuration(double lambda, double k_c, double delta_e,
                                double kappa, double gamma);

/// True when g_L(k) = -g_R(k) for every k (this includes the uncoupled case).
bool is_swap_configuration(const SystemParams& p, double tol = 1e-12);

inline constexpr double kNormTolerance = 1e-12;

/// Ground-state superposition A_L|L> + A_R|R>.
class AtomQubit {
 public:
  AtomQubit(cplx a_L, cplx a_R);
  cplx L() const { return a_L_; }
  cplx R() const { return a_R_; }

 private:
  cplx a_L_;
  cplx a_R_;
};

/// Photon polarization C_L|k_L> + C_R|k_R>.
class PolarizationQubit {
 public:
  PolarizationQubit(cplx c_L, cplx c_R);
  cplx L() const { return c_L_; }
  cplx R() const { return c_R_; }

 private:
  cplx c_L_;
  cplx c_R_;
};

/// Amplitudes on |L;k_L>, |R;k_R>, |L;k_R>, |R;k_L> (in that order) at fixed k.
struct JointKState {
  std::array<cplx, 4> alpha{};
  double k = 0.0;

  double norm_squared() const;
  /// The monochromatic product state (A_L|L> + A_R|R>) (C_L|k_L> + C_R|k_R>).
  static JointKState product(const AtomQubit& a, const PolarizationQubit& c, double k);
};

/// Complex poles of the dressed atom-cavity resolvent.
struct RabiPoles {
  cplx omega_plus;
  cplx omega_minus;
};

}  // namespace cavityswap
