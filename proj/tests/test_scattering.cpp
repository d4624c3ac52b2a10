#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cavityswap/scattering.hpp"
#include "support/random_params.hpp"

namespace cavityswap {
namespace {

constexpr double kPi = std::numbers::pi;

SystemParams swap_params(double lambda, double gamma = 0.0) {
  return swap_configuration(lambda, 0.0, 0.0, 1.0, gamma);
}

TEST(CouplingAmplitude, Values) {
  SystemParams p;
  EXPECT_EQ(coupling_amplitude(0.3, p, Polarization::L), cplx(0.0, 0.0));
  p.lambda_L = 1.0;
  const cplx g = coupling_amplitude(0.0, p, Polarization::L);
  EXPECT_NEAR(g.real(), 0.0, 1e-16);
  EXPECT_NEAR(g.imag(), -0.5641895835477563, 1e-15);
}

// |g|^2 integrates to lambda^2. Independent route: k = kappa tan(u) maps R onto
// (-pi/2, pi/2) and the midpoint rule is exact-looking for this smooth integrand.
TEST(CouplingAmplitude, LorentzianNormalization) {
  SystemParams p;
  p.kappa = 0.7;
  p.k_c = 1.3;
  p.lambda_L = 2.5;
  const int n = 20000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = -kPi / 2 + kPi * (i + 0.5) / n;
    const double k = p.k_c + p.kappa * std::tan(u);
    const double jac = p.kappa / (std::cos(u) * std::cos(u));
    sum += std::norm(coupling_amplitude(k, p, Polarization::L)) * jac * (kPi / n);
  }
  EXPECT_NEAR(sum, p.lambda_L * p.lambda_L, 1e-10);
}

TEST(InteractionStrength, Values) {
  SystemParams p;
  p.lambda_L = p.lambda_R = 2.0;
  for (double dk : {-3.0, 0.0, 0.4, 12.0}) {
    const double v = interaction_strength(dk, p);
    EXPECT_NEAR(v * v, 2.0 * 4.0 * (1.0 / kPi) / (dk * dk + 1.0), 1e-14);
  }
  p.lambda_L = 3.0;
  p.lambda_R = 4.0;
  for (double k : {-7.0, 0.0, 0.25, 9.0}) {
    const double v = interaction_strength(k, p);
    EXPECT_NEAR(std::norm(coupling_amplitude(k, p, Polarization::L)) / (v * v), 9.0 / 25.0, 1e-14);
  }
  const double r1 = std::norm(coupling_amplitude(-2.0, p, Polarization::L)) / std::pow(interaction_strength(-2.0, p), 2);
  const double r2 = std::norm(coupling_amplitude(5.5, p, Polarization::L)) / std::pow(interaction_strength(5.5, p), 2);
  EXPECT_NEAR(r1, r2, 1e-15);
  EXPECT_EQ(interaction_strength(0.0, SystemParams{}), 0.0);
}

TEST(BrightDark, SwapConfigurationExamples) {
  const SystemParams p = swap_params(1.0);
  const double h = 1.0 / std::sqrt(2.0);
  JointKState s{{h, -h, 0.0, 0.0}, 0.3};
  BrightDarkSplit d = bright_dark_decompose(s, p);
  EXPECT_NEAR(std::abs(d.bright), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(d.dark), 0.0, 1e-14);

  s.alpha = {h, h, 0.0, 0.0};
  d = bright_dark_decompose(s, p);
  EXPECT_NEAR(std::abs(d.bright), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(d.dark), 1.0, 1e-14);

  s.alpha = {0.0, 0.0, 1.0, 0.0};
  d = bright_dark_decompose(s, p);
  EXPECT_EQ(d.trivial_LR, cplx(1.0, 0.0));
  EXPECT_EQ(d.bright, cplx(0.0, 0.0));
  EXPECT_EQ(d.dark, cplx(0.0, 0.0));
  EXPECT_EQ(d.trivial_RL, cplx(0.0, 0.0));
}

TEST(BrightDark, UndefinedWithoutCoupling) {
  EXPECT_THROW(bright_dark_decompose(JointKState{{1.0, 0.0, 0.0, 0.0}, 0.0}, SystemParams{}),
               SingularInputError);
}

TEST(BrightDark, PreservesNorm) {
  testing::ParamGenerator gen(11);
  for (int i = 0; i < 1000; ++i) {
    SystemParams p = gen.params(false);
    p.lambda_L += 0.1;
    JointKState s;
    s.k = gen.frequency(p);
    for (auto& a : s.alpha) a = gen.uniform(0.0, 1.0) * gen.unit_complex();
    EXPECT_NEAR(bright_dark_decompose(s, p).norm_squared(), s.norm_squared(), 1e-12);
  }
}

TEST(RabiPoles, Values) {
  SystemParams p;
  RabiPoles w = rabi_poles(p);
  EXPECT_NEAR(std::abs(w.omega_plus - cplx(0.0, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w.omega_minus - cplx(0.0, -1.0)), 0.0, 1e-15);

  p.lambda_L = p.lambda_R = 10.0;
  w = rabi_poles(p);
  EXPECT_NEAR(w.omega_plus.real(), 14.13329402510257, 1e-12);
  EXPECT_NEAR(w.omega_minus.real(), -14.13329402510257, 1e-12);
  EXPECT_NEAR(w.omega_plus.imag(), -0.5, 1e-12);
  EXPECT_NEAR(w.omega_minus.imag(), -0.5, 1e-12);
}

TEST(RabiPoles, VietaAndStability) {
  testing::ParamGenerator gen(3);
  for (int i = 0; i < 2000; ++i) {
    const SystemParams p = gen.params(i % 2 == 1);
    const RabiPoles w = rabi_poles(p);
    const cplx sum = w.omega_plus + w.omega_minus;
    EXPECT_NEAR(std::abs(sum - (p.lossy_detuning() - cplx(0.0, p.kappa))), 0.0, 1e-12);
    const cplx product = w.omega_plus * w.omega_minus;
    const cplx expect = -cplx(0.0, p.kappa) * p.lossy_detuning() - p.coupling_sum();
    EXPECT_NEAR(std::abs(product - expect), 0.0, 1e-10 * std::max(1.0, std::abs(expect)));
    if (p.coupling_sum() > 0.0) {
      EXPECT_LT(w.omega_plus.imag(), 0.0);
      EXPECT_LT(w.omega_minus.imag(), 0.0);
    }
  }
}

TEST(Resolvent, UncoupledValues) {
  SystemParams p;
  const cplx g = resolvent_ee(1.0, p);
  EXPECT_NEAR(std::abs(g - 1.0), 0.0, 1e-15);
  EXPECT_THROW(resolvent_ee(0.0, p), SingularInputError);
}

TEST(Resolvent, MatchesPhaseFactorIdentity) {
  testing::ParamGenerator gen(19);
  for (int i = 0; i < 10000; ++i) {
    const SystemParams p = gen.params(i % 2 == 0);
    const double k = gen.frequency(p);
    const double v = interaction_strength(k, p);
    const cplx lhs = 1.0 - 2.0 * kPi * cplx(0.0, 1.0) * v * v * resolvent_ee(k, p);
    EXPECT_LT(std::abs(lhs - phase_factor(k, p)), 1e-12);
  }
}

TEST(PhaseFactor, Values) {
  EXPECT_EQ(phase_factor(0.0, SystemParams{}), cplx(1.0, 0.0));
  EXPECT_EQ(phase_factor(3.0, SystemParams{}), cplx(1.0, 0.0));

  const cplx e0 = phase_factor(0.0, swap_params(2.0));
  EXPECT_NEAR(std::abs(e0 + 1.0), 0.0, 1e-15);

  const cplx lossy = phase_factor(0.0, swap_params(10.0, 0.5));
  EXPECT_NEAR(lossy.real(), -0.9950124688279302, 1e-15);
  EXPECT_NEAR(lossy.imag(), 0.0, 1e-15);

  // lambda >> kappa at dk = kappa: e -> (kappa + i kappa)/(kappa - i kappa) = i.
  const cplx far = phase_factor(1.0, swap_params(1e4));
  EXPECT_NEAR(std::abs(far - cplx(0.0, 1.0)), 0.0, 1e-7);
}

TEST(PhaseFactor, ModulusBounds) {
  testing::ParamGenerator gen(23);
  for (int i = 0; i < 5000; ++i) {
    const SystemParams lossless = gen.params(false);
    EXPECT_NEAR(std::abs(phase_factor(gen.frequency(lossless), lossless)), 1.0, 1e-12);
    const SystemParams lossy = gen.params(true);
    EXPECT_LE(std::abs(phase_factor(gen.frequency(lossy), lossy)), 1.0 + 1e-15);
  }
}

TEST(PhaseFactor, FarDetunedLimit) {
  for (double gamma : {0.0, 0.5}) {
    const SystemParams p = swap_params(10.0, gamma);
    EXPECT_NEAR(std::abs(phase_factor(1e6, p) - 1.0), 0.0, 1e-5);
    EXPECT_NEAR(std::abs(phase_factor(-1e6, p) - 1.0), 0.0, 1e-5);
  }
}

TEST(TransferMatrix, SwapAtPiRoot) {
  const SystemParams p = swap_params(10.0);
  for (double k : {0.0, -std::sqrt(199.0), std::sqrt(199.0)}) {
    const TransferMatrix t = transfer_matrix(k, p);
    EXPECT_LT(std::abs(t.t_LL), 1e-12) << k;
    EXPECT_LT(std::abs(t.t_RR), 1e-12) << k;
    EXPECT_LT(std::abs(t.t_LR - 1.0), 1e-12) << k;
    EXPECT_LT(std::abs(t.t_RL - 1.0), 1e-12) << k;
    EXPECT_FALSE(t.lossy);
  }
}

TEST(TransferMatrix, IdentityWithoutCoupling) {
  const TransferMatrix t = transfer_matrix(0.7, SystemParams{});
  EXPECT_EQ(t.t_LL, cplx(1.0, 0.0));
  EXPECT_EQ(t.t_RR, cplx(1.0, 0.0));
  EXPECT_EQ(t.t_LR, cplx(0.0, 0.0));
  EXPECT_EQ(t.t_RL, cplx(0.0, 0.0));
}

TEST(TransferMatrix, BellPointStrongCoupling) {
  const TransferMatrix t = transfer_matrix(1.0, swap_params(1e4));
  EXPECT_NEAR(std::abs(t.t_LL - cplx(0.5, 0.5)), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(t.t_RL - cplx(0.5, -0.5)), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(t.t_RL / t.t_LL - cplx(0.0, -1.0)), 0.0, 1e-7);
}

TEST(TransferMatrix, UnitaryWithoutLoss) {
  testing::ParamGenerator gen(29);
  for (int i = 0; i < 10000; ++i) {
    const SystemParams p = gen.params(false);
    const TransferMatrix t = transfer_matrix(gen.frequency(p), p);
    // Columns orthonormal.
    EXPECT_NEAR(std::norm(t.t_LL) + std::norm(t.t_RL), 1.0, 1e-12);
    EXPECT_NEAR(std::norm(t.t_LR) + std::norm(t.t_RR), 1.0, 1e-12);
    EXPECT_LT(std::abs(std::conj(t.t_LL) * t.t_LR + std::conj(t.t_RL) * t.t_RR), 1e-12);
  }
}

TEST(TransferMatrix, ContractionWithLoss) {
  testing::ParamGenerator gen(31);
  for (int i = 0; i < 10000; ++i) {
    const SystemParams p = gen.params(true);
    const double k = gen.frequency(p);
    const TransferMatrix t = transfer_matrix(k, p);
    EXPECT_TRUE(t.lossy);
    const auto sv = t.singular_values();
    EXPECT_LE(sv[0], 1.0 + 1e-12);
    EXPECT_NEAR(sv[0], 1.0, 1e-12);
    EXPECT_NEAR(sv[1], std::abs(phase_factor(k, p)), 1e-9);
  }
}

TEST(TransferMatrix, OffDiagonalPhaseRelation) {
  testing::ParamGenerator gen(37);
  for (int i = 0; i < 2000; ++i) {
    const SystemParams p = gen.params(i % 2 == 0);
    const TransferMatrix t = transfer_matrix(gen.frequency(p), p);
    const cplx expect = t.t_RL * std::polar(1.0, 2.0 * (p.theta_R - p.theta_L));
    EXPECT_LT(std::abs(t.t_LR - expect), 1e-12);
  }
}

// T (g_L*, g_R*)/V = e^{i delta_s} (g_L*, g_R*)/V and T (g_R, -g_L)/V = (g_R, -g_L)/V.
TEST(TransferMatrix, BrightAndDarkEigenvectors) {
  testing::ParamGenerator gen(41);
  for (int i = 0; i < 2000; ++i) {
    SystemParams p = gen.params(i % 2 == 0);
    p.lambda_R += 0.05;
    const double k = gen.frequency(p);
    const TransferMatrix t = transfer_matrix(k, p);
    const cplx gL = coupling_amplitude(k, p, Polarization::L);
    const cplx gR = coupling_amplitude(k, p, Polarization::R);
    const double v = interaction_strength(k, p);
    const cplx b0 = std::conj(gL) / v, b1 = std::conj(gR) / v;
    const cplx d0 = gR / v, d1 = -gL / v;
    const cplx e = phase_factor(k, p);
    EXPECT_LT(std::abs(t.t_LL * b0 + t.t_LR * b1 - e * b0), 1e-12);
    EXPECT_LT(std::abs(t.t_RL * b0 + t.t_RR * b1 - e * b1), 1e-12);
    EXPECT_LT(std::abs(t.t_LL * d0 + t.t_LR * d1 - d0), 1e-12);
    EXPECT_LT(std::abs(t.t_RL * d0 + t.t_RR * d1 - d1), 1e-12);
  }
}

TEST(ApplyScattering, DarkStatePassesThrough) {
  const SystemParams p = swap_params(5.0, 0.3);
  const double h = 1.0 / std::sqrt(2.0);
  const JointKState s{{h, h, 0.0, 0.0}, 0.8};
  const JointKState out = apply_scattering(s, p);
  for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(out.alpha[i] - s.alpha[i]), 1e-14);
}

TEST(ApplyScattering, SwapsAtRoot) {
  const SystemParams p = swap_params(10.0);
  const JointKState out = apply_scattering(JointKState{{1.0, 0.0, 0.0, 0.0}, 0.0}, p);
  EXPECT_LT(std::abs(out.alpha[0]), 1e-14);
  EXPECT_LT(std::abs(out.alpha[1] - 1.0), 1e-14);
  EXPECT_EQ(out.alpha[2], cplx(0.0, 0.0));
  EXPECT_EQ(out.alpha[3], cplx(0.0, 0.0));
}

TEST(ApplyScattering, NormBookkeeping) {
  testing::ParamGenerator gen(43);
  for (int i = 0; i < 2000; ++i) {
    const bool lossy = i % 2 == 0;
    SystemParams p = gen.params(lossy);
    p.lambda_L += 0.05;
    JointKState s;
    s.k = gen.frequency(p);
    for (auto& a : s.alpha) a = gen.uniform(0.0, 0.5) * gen.unit_complex();
    const JointKState out = apply_scattering(s, p);
    const BrightDarkSplit split = bright_dark_decompose(s, p);
    const double expect = std::norm(split.bright) * std::norm(phase_factor(s.k, p)) + std::norm(split.dark) +
                          std::norm(split.trivial_LR) + std::norm(split.trivial_RL);
    EXPECT_NEAR(out.norm_squared(), expect, 1e-12);
    if (!lossy) EXPECT_NEAR(out.norm_squared(), s.norm_squared(), 1e-12);
  }
}

}  // namespace
}  // namespace cavityswap
