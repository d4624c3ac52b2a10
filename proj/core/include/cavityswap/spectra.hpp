#pragma once

#include <functional>
#include <iosfwd>
#include <variant>
#include <vector>

#include "cavityswap/params.hpp"

namespace cavityswap {

/// Normalized Gaussian single-photon spectrum
/// f(k) = pi^{-1/4} kappa_in^{-1/2} exp(-(k - k_peak)^2 / (2 kappa_in^2) + i k x_0).
struct GaussianPacket {
  double k_peak = 0.0;
  double kappa_in = 0.1;
  double x_0 = 0.0;

  cplx amplitude(double k) const;
  /// |f(k)|^2
  double power(double k) const;
};

/// Spectrum tabulated on an ascending, possibly non-uniform grid (trapezoid rule).
struct SampledPacket {
  std::vector<double> k;
  std::vector<cplx> f;
};

using Wavepacket = std::variant<GaussianPacket, SampledPacket>;

/// Half-width of the quadrature window, in units of kappa_in.
inline constexpr double kGaussianWindow = 8.0;

/// Throws ParameterError for kappa_in <= 0.
Wavepacket gaussian_spectrum(double k_peak, double kappa_in, double x_0 = 0.0);

/// Tabulate `g` on n uniform points over k_peak +- half_width * kappa_in.
SampledPacket sample_packet(const GaussianPacket& g, double half_width, std::size_t n);

/// Throws ParameterError for fewer than three points, mismatched sizes or a non-ascending grid.
void validate_grid(const SampledPacket& s);

/// Trapezoid weights for an ascending grid.
std::vector<double> trapezoid_weights(const std::vector<double>& k);

/// Integral of |f|^2: closed form for the Gaussian, trapezoid rule for samples.
double packet_norm(const Wavepacket& w);

/// Integral of fn(k) |f(k)|^2 dk. Gaussian packets use composite Gauss-Legendre
/// on k_peak +- 8 kappa_in, refined until successive levels agree to 1e-10.
cplx spectral_average(const Wavepacket& w, const std::function<cplx(double)>& fn);

/// xi = integral of t_LL(k) |f(k)|^2 dk.
cplx xi_integral(const Wavepacket& w, const SystemParams& p);

/// Rows `k,re_f,im_f`; a non-numeric first line is treated as a header.
SampledPacket read_packet_csv(std::istream& in);
void write_packet_csv(std::ostream& out, const SampledPacket& s);

}  // namespace cavityswap
