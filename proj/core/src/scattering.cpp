#include "cavityswap/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cavityswap {

namespace {

constexpr cplx kI{0.0, 1.0};

double lorentzian_weight(double dk, double kappa) {
  return kappa / std::numbers::pi / (dk * dk + kappa * kappa);
}

}  // namespace

cplx coupling_amplitude(double k, const SystemParams& p, Polarization pol) {
  const double lambda = pol == Polarization::L ? p.lambda_L : p.lambda_R;
  const double theta = pol == Polarization::L ? p.theta_L : p.theta_R;
  if (lambda == 0.0) return {0.0, 0.0};
  const cplx num = std::polar(lambda * std::sqrt(p.kappa / std::numbers::pi), theta);
  return num / cplx(p.detuning(k), p.kappa);
}

double interaction_strength(double k, const SystemParams& p) {
  // |g_L|^2 + |g_R|^2 = Lambda * kappa/pi / (dk^2 + kappa^2)
  return std::sqrt(p.coupling_sum() * lorentzian_weight(p.detuning(k), p.kappa));
}

double BrightDarkSplit::norm_squared() const {
  return std::norm(bright) + std::norm(dark) + std::norm(trivial_LR) + std::norm(trivial_RL);
}

BrightDarkSplit bright_dark_decompose(const JointKState& s, const SystemParams& p) {
  const double v = interaction_strength(s.k, p);
  if (v == 0.0) throw SingularInputError("bright/dark split undefined for an uncoupled atom (V = 0)");
  const cplx gL = coupling_amplitude(s.k, p, Polarization::L);
  const cplx gR = coupling_amplitude(s.k, p, Polarization::R);
  BrightDarkSplit out;
  out.bright = (gL * s.alpha[0] + gR * s.alpha[1]) / v;
  out.dark = (std::conj(gR) * s.alpha[0] - std::conj(gL) * s.alpha[1]) / v;
  out.trivial_LR = s.alpha[2];
  out.trivial_RL = s.alpha[3];
  return out;
}

RabiPoles rabi_poles(const SystemParams& p) {
  const cplx d = p.lossy_detuning();
  const cplx centre = (d - kI * p.kappa) / 2.0;
  const cplx half = (d + kI * p.kappa) / 2.0;
  const cplx root = std::sqrt(half * half + p.coupling_sum());
  return {centre + root, centre - root};
}

cplx resolvent_ee(double k, const SystemParams& p) {
  const RabiPoles w = rabi_poles(p);
  const double dk = p.detuning(k);
  const cplx den = (dk - w.omega_plus) * (dk - w.omega_minus);
  if (den == cplx(0.0, 0.0)) {
    throw SingularInputError("resolvent evaluated on a real pole");
  }
  return (dk + kI * p.kappa) / den;
}

cplx phase_factor(double k, const SystemParams& p) {
  const double dk = p.detuning(k);
  const double lam = p.coupling_sum();
  if (lam == 0.0) return {1.0, 0.0};
  const cplx cavity = (dk - p.lossy_detuning()) * (dk * dk + p.kappa * p.kappa);
  const cplx num = cavity - cplx(dk, p.kappa) * lam;
  const cplx den = cavity - cplx(dk, -p.kappa) * lam;
  return num / den;
}

std::array<double, 2> TransferMatrix::singular_values() const {
  // Eigenvalues of the Hermitian M^dagger M.
  const double h11 = std::norm(t_LL) + std::norm(t_RL);
  const double h22 = std::norm(t_LR) + std::norm(t_RR);
  const cplx h12 = std::conj(t_LL) * t_LR + std::conj(t_RL) * t_RR;
  const double disc = std::hypot(0.5 * (h11 - h22), std::abs(h12));
  const double hi = 0.5 * (h11 + h22) + disc;
  const double lo = std::max(0.0, 0.5 * (h11 + h22) - disc);
  return {std::sqrt(hi), std::sqrt(lo)};
}

TransferMatrix transfer_matrix(double k, const SystemParams& p) {
  TransferMatrix t;
  t.k = k;
  t.lossy = p.lossy();
  const double lam = p.coupling_sum();
  if (lam == 0.0) return t;

  // The bright weights |g_mu|^2 / V^2 are k-independent: lambda_mu^2 / Lambda.
  const double wL = p.lambda_L * p.lambda_L / lam;
  const double wR = p.lambda_R * p.lambda_R / lam;
  const cplx cross = std::sqrt(wL * wR) * std::polar(1.0, p.theta_R - p.theta_L);  // g_L* g_R / V^2
  const cplx e = phase_factor(k, p);

  t.t_LL = e * wL + wR;
  t.t_RR = e * wR + wL;
  t.t_LR = cross * (e - 1.0);
  t.t_RL = std::conj(cross) * (e - 1.0);
  return t;
}

JointKState apply_scattering(const JointKState& s, const SystemParams& p) {
  const TransferMatrix t = transfer_matrix(s.k, p);
  JointKState out = s;
  out.alpha[0] = t.t_LL * s.alpha[0] + t.t_LR * s.alpha[1];
  out.alpha[1] = t.t_RL * s.alpha[0] + t.t_RR * s.alpha[1];
  return out;
}

}  // namespace cavityswap
