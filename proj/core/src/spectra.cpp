#include "cavityswap/spectra.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "cavityswap/format.hpp"
#include "cavityswap/quadrature.hpp"
#include "cavityswap/scattering.hpp"

namespace cavityswap {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

cplx GaussianPacket::amplitude(double k) const {
  const double d = (k - k_peak) / kappa_in;
  const double mag = std::exp(-0.5 * d * d) / (std::pow(std::numbers::pi, 0.25) * std::sqrt(kappa_in));
  return std::polar(mag, k * x_0);
}

double GaussianPacket::power(double k) const {
  const double d = (k - k_peak) / kappa_in;
  return std::exp(-d * d) / (std::sqrt(std::numbers::pi) * kappa_in);
}

Wavepacket gaussian_spectrum(double k_peak, double kappa_in, double x_0) {
  if (!(kappa_in > 0.0) || !std::isfinite(kappa_in)) {
    throw ParameterError("kappa_in must be positive");
  }
  if (!std::isfinite(k_peak) || !std::isfinite(x_0)) {
    throw ParameterError("k_peak and x_0 must be finite");
  }
  return GaussianPacket{k_peak, kappa_in, x_0};
}

SampledPacket sample_packet(const GaussianPacket& g, double half_width, std::size_t n) {
  if (n < 3) throw ParameterError("a sampled packet needs at least three points");
  SampledPacket s;
  s.k.resize(n);
  s.f.resize(n);
  const double lo = g.k_peak - half_width * g.kappa_in;
  const double step = 2.0 * half_width * g.kappa_in / static_cast<double>(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    s.k[j] = lo + step * static_cast<double>(j);
    s.f[j] = g.amplitude(s.k[j]);
  }
  return s;
}

void validate_grid(const SampledPacket& s) {
  if (s.k.size() != s.f.size()) throw ParameterError("sampled packet: k and f sizes differ");
  if (s.k.size() < 3) throw ParameterError("sampled packet: grid needs at least three points");
  for (std::size_t j = 1; j < s.k.size(); ++j) {
    if (!(s.k[j] > s.k[j - 1])) throw ParameterError("sampled packet: grid must be strictly ascending");
  }
}

std::vector<double> trapezoid_weights(const std::vector<double>& k) {
  const std::size_t n = k.size();
  std::vector<double> w(n, 0.0);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double h = 0.5 * (k[j + 1] - k[j]);
    w[j] += h;
    w[j + 1] += h;
  }
  return w;
}

double packet_norm(const Wavepacket& w) {
  return std::visit(Overloaded{
                        [](const GaussianPacket&) { return 1.0; },
                        [](const SampledPacket& s) {
                          validate_grid(s);
                          const auto wt = trapezoid_weights(s.k);
                          double n = 0.0;
                          for (std::size_t j = 0; j < s.k.size(); ++j) n += wt[j] * std::norm(s.f[j]);
                          return n;
                        },
                    },
                    w);
}

cplx spectral_average(const Wavepacket& w, const std::function<cplx(double)>& fn) {
  return std::visit(
      Overloaded{
          [&](const GaussianPacket& g) {
            const double a = g.k_peak - kGaussianWindow * g.kappa_in;
            const double b = g.k_peak + kGaussianWindow * g.kappa_in;
            return integrate_composite([&](double k) { return fn(k) * g.power(k); }, a, b, 1e-10)
                .value;
          },
          [&](const SampledPacket& s) {
            validate_grid(s);
            const auto wt = trapezoid_weights(s.k);
            cplx acc{0.0, 0.0};
            for (std::size_t j = 0; j < s.k.size(); ++j) acc += wt[j] * std::norm(s.f[j]) * fn(s.k[j]);
            return acc;
          },
      },
      w);
}

cplx xi_integral(const Wavepacket& w, const SystemParams& p) {
  validate_params(p);
  return spectral_average(w, [&](double k) { return transfer_matrix(k, p).t_LL; });
}

SampledPacket read_packet_csv(std::istream& in) {
  SampledPacket s;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream row(line);
    double k = 0.0, re = 0.0, im = 0.0;
    if (!(row >> k >> re >> im)) {
      if (first) {
        first = false;
        continue;
      }
      throw ParameterError("packet CSV: malformed row '" + line + "'");
    }
    first = false;
    s.k.push_back(k);
    s.f.emplace_back(re, im);
  }
  validate_grid(s);
  return s;
}

void write_packet_csv(std::ostream& out, const SampledPacket& s) {
  out << "k,re_f,im_f\n";
  for (std::size_t j = 0; j < s.k.size(); ++j) {
    out << format_double(s.k[j]) << ',' << format_double(s.f[j].real()) << ','
        << format_double(s.f[j].imag()) << '\n';
  }
}

}  // namespace cavityswap
