#include "cavityswap/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cavityswap {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ParameterError(std::string(name) + " must be finite");
}

void require_normalized(cplx a, cplx b, const char* type) {
  const double n = std::norm(a) + std::norm(b);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
    throw ParameterError(std::string(type) + " amplitudes must be normalized (|a|^2+|b|^2 = " +
                         std::to_string(n) + ")");
  }
}

}  // namespace

SystemParams SystemParams::scaled(double s) const {
  SystemParams q = *this;
  q.k_c *= s;
  q.delta_e *= s;
  q.kappa *= s;
  q.gamma *= s;
  q.lambda_L *= s;
  q.lambda_R *= s;
  return q;
}

SystemParams validate_params(const SystemParams& p) {
  require_finite(p.k_c, "k_c");
  require_finite(p.delta_e, "delta_e");
  require_finite(p.kappa, "kappa");
  require_finite(p.gamma, "gamma");
  require_finite(p.lambda_L, "lambda_L");
  require_finite(p.lambda_R, "lambda_R");
  require_finite(p.theta_L, "theta_L");
  require_finite(p.theta_R, "theta_R");
  if (!(p.kappa > 0.0)) throw ParameterError("kappa must be positive");
  if (p.gamma < 0.0) throw ParameterError("gamma must be non-negative");
  if (p.lambda_L < 0.0) throw ParameterError("lambda_L must be non-negative");
  if (p.lambda_R < 0.0) throw ParameterError("lambda_R must be non-negative");
  return p;
}

double kappa_from_mirror(const MirrorSpec& m) {
  require_finite(m.r, "r");
  require_finite(m.l, "l");
  const double r = std::abs(m.r);
  if (r == 0.0) throw ParameterError("r = 0 is out of model: the leakage rate diverges");
  if (r > 1.0) throw ParameterError("|r| must not exceed 1");
  if (!(m.l > 0.0)) throw ParameterError("cavity length l must be positive");
  // -log(r) is -0.0 for r == 1; normalize the sign.
  return r == 1.0 ? 0.0 : -std::log(r) / (2.0 * m.l);
}

SystemParams swap_configuration(double lambda, double k_c, double delta_e, double kappa,
                                double gamma) {
  if (!(lambda > 0.0)) throw ParameterError("lambda must be positive in the swap configuration");
  SystemParams p;
  p.k_c = k_c;
  p.delta_e = delta_e;
  p.kappa = kappa;
  p.gamma = gamma;
  p.lambda_L = lambda;
  p.lambda_R = lambda;
  p.theta_L = std::numbers::pi;
  p.theta_R = 0.0;
  return validate_params(p);
}

bool is_swap_configuration(const SystemParams& p, double tol) {
  const double scale = std::max({1.0, p.lambda_L, p.lambda_R});
  if (std::abs(p.lambda_L - p.lambda_R) > tol * scale) return false;
  if (p.lambda_L == 0.0 && p.lambda_R == 0.0) return true;
  return std::abs(std::polar(1.0, p.theta_L - p.theta_R) + 1.0) <= 1e-9;
}

AtomQubit::AtomQubit(cplx a_L, cplx a_R) : a_L_(a_L), a_R_(a_R) {
  require_normalized(a_L, a_R, "AtomQubit");
}

PolarizationQubit::PolarizationQubit(cplx c_L, cplx c_R) : c_L_(c_L), c_R_(c_R) {
  require_normalized(c_L, c_R, "PolarizationQubit");
}

double JointKState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : alpha) s += std::norm(a);
  return s;
}

JointKState JointKState::product(const AtomQubit& a, const PolarizationQubit& c, double k) {
  JointKState s;
  s.k = k;
  s.alpha = {a.L() * c.L(), a.R() * c.R(), a.L() * c.R(), a.R() * c.L()};
  return s;
}

}  // namespace cavityswap
