#include "cavityswap/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <ostream>

#include "cavityswap/format.hpp"
#include "cavityswap/scattering.hpp"

namespace cavityswap {

namespace {

void require_swap_configuration(const SystemParams& p) {
  validate_params(p);
  if (!is_swap_configuration(p)) {
    throw ParameterError("parameters are not in the swap configuration (need lambda_L = lambda_R "
                         "and theta_L - theta_R = pi)");
  }
}

// Real roots of x^3 + b x^2 + c x + d, ascending, with multiplicity.
std::vector<double> real_cubic_roots(double b, double c, double d) {
  auto poly = [&](double x) { return ((x + b) * x + c) * x + d; };
  auto dpoly = [&](double x) { return (3.0 * x + 2.0 * b) * x + c; };
  const double shift = b / 3.0;
  const double pp = c - b * b / 3.0;
  const double qq = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double disc = qq * qq / 4.0 + pp * pp * pp / 27.0;

  std::vector<double> roots;
  if (pp == 0.0 && qq == 0.0) {
    roots.assign(3, -shift);
  } else if (disc > 0.0) {
    const double s = std::sqrt(disc);
    roots.push_back(std::cbrt(-qq / 2.0 + s) + std::cbrt(-qq / 2.0 - s) - shift);
  } else {
    const double r = 2.0 * std::sqrt(-pp / 3.0);
    const double arg = std::clamp(3.0 * qq / (pp * r), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int j = 0; j < 3; ++j) {
      roots.push_back(r * std::cos(phi - 2.0 * std::numbers::pi * j / 3.0) - shift);
    }
  }
  for (double& x : roots) {
    for (int it = 0; it < 8; ++it) {
      const double dp = dpoly(x);
      if (dp == 0.0) break;
      const double step = poly(x) / dp;
      if (!std::isfinite(step)) break;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

template <class F>
double golden_section_min(F f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

SystemParams with_swap_coupling(const SystemParams& base, double lambda, double gamma) {
  SystemParams p = base;
  p.lambda_L = lambda;
  p.lambda_R = lambda;
  p.theta_L = std::numbers::pi;
  p.theta_R = 0.0;
  p.gamma = gamma;
  return validate_params(p);
}

}  // namespace

double eta_overlap(const AtomQubit& a, const PolarizationQubit& c) {
  return std::norm(a.L() * c.L() - a.R() * c.R());
}

double fidelity_from(cplx xi, double eta) {
  return 1.0 - 2.0 * xi.real() * eta + std::norm(xi) * eta * eta;
}

double bell_probability_from(cplx xi) { return 0.5 + std::norm(xi) - xi.real() + xi.imag(); }

SwapRoots swap_frequencies(const SystemParams& p) {
  require_swap_configuration(p);
  SwapRoots out;
  const double lam = p.coupling_sum();
  if (lam == 0.0) {
    out.warnings.emplace_back("uncoupled atom: t_LL = 1 everywhere, no swap frequency exists");
    return out;
  }

  // e^{i delta_s} = -1  <=>  numerator + denominator = 0 (lossless part):
  // x^3 - delta_e x^2 + (kappa^2 - Lambda) x - delta_e kappa^2 = 0, x = k - k_c.
  const double kap2 = p.kappa * p.kappa;
  std::vector<double> lossless;
  if (p.delta_e == 0.0) {
    const double r2 = lam - kap2;
    if (r2 > 0.0) {
      const double r = std::sqrt(r2);
      lossless = {-r, 0.0, r};
    } else if (r2 == 0.0) {
      lossless = {0.0, 0.0, 0.0};
    } else {
      lossless = {0.0};
    }
  } else {
    lossless = real_cubic_roots(-p.delta_e, kap2 - lam, -p.delta_e * kap2);
  }
  if (lossless.size() == 1) {
    out.complex_pair_omitted = true;
    out.warnings.emplace_back("2 lambda^2 < kappa^2 (or detuned equivalent): complex pair of roots omitted");
  }

  if (!p.lossy()) {
    out.method = RootMethod::ExactCubic;
    for (double x : lossless) out.roots.push_back(p.k_c + x);
    return out;
  }

  out.method = RootMethod::NumericMinimization;
  std::vector<double> seeds = lossless;
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  auto abs_tll = [&](double x) { return std::norm(transfer_matrix(p.k_c + x, p).t_LL); };
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    double half = p.kappa;
    if (i > 0) half = std::min(half, 0.5 * (seeds[i] - seeds[i - 1]));
    if (i + 1 < seeds.size()) half = std::min(half, 0.5 * (seeds[i + 1] - seeds[i]));
    const double lo = seeds[i] - half;
    const double hi = seeds[i] + half;
    const double x = golden_section_min(abs_tll, lo, hi, 1e-12 * std::max(1.0, half));
    if (hi - x < 1e-9 * half || x - lo < 1e-9 * half) {
      out.warnings.emplace_back("minimum of |t_LL| near seed " + format_double(seeds[i]) +
                                " sits on the search bracket edge");
    }
    out.roots.push_back(p.k_c + x);
  }
  return out;
}

FigureOfMerit swap_fidelity(const AtomQubit& a, const PolarizationQubit& c, const Wavepacket& w,
                            const SystemParams& p) {
  require_swap_configuration(p);
  FigureOfMerit out;
  out.eta = eta_overlap(a, c);
  out.xi = xi_integral(w, p);
  out.value = fidelity_from(out.xi, out.eta);
  return out;
}

FigureOfMerit min_swap_fidelity(const Wavepacket& w, const SystemParams& p) {
  require_swap_configuration(p);
  FigureOfMerit out;
  out.eta = 1.0;
  out.xi = xi_integral(w, p);
  out.value = fidelity_from(out.xi, 1.0);
  return out;
}

EntangleSearch entangle_frequencies(const SystemParams& p) {
  require_swap_configuration(p);
  EntangleSearch out;
  auto balance = [&](double k) {
    const TransferMatrix t = transfer_matrix(k, p);
    return std::abs(t.t_LL) - std::abs(t.t_RL);
  };
  const double lo = 0.25 * p.kappa;
  const double hi = 4.0 * p.kappa;
  const std::pair<double, double> brackets[] = {{p.k_c + lo, p.k_c + hi}, {p.k_c - hi, p.k_c - lo}};
  for (auto [a, b] : brackets) {
    double fa = balance(a);
    const double fb = balance(b);
    if (fa != 0.0 && fb != 0.0 && (fa < 0.0) == (fb < 0.0)) {
      out.warnings.emplace_back("no balanced point in [" + format_double(a - p.k_c) + ", " +
                                format_double(b - p.k_c) + "] relative to k_c");
      continue;
    }
    if (fa == 0.0) b = a;
    if (fb == 0.0) a = b;
    for (int it = 0; it < 200 && b - a > 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
         ++it) {
      const double m = 0.5 * (a + b);
      const double fm = balance(m);
      if (fm == 0.0) {
        a = b = m;
      } else if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    const double k = 0.5 * (a + b);
    const TransferMatrix t = transfer_matrix(k, p);
    EntanglePoint pt;
    pt.k = k;
    pt.theta = std::arg(t.t_RL / t.t_LL);
    if (pt.theta == -std::numbers::pi) pt.theta = std::numbers::pi;
    pt.balance_residual = std::abs(std::abs(t.t_LL) - std::abs(t.t_RL));
    out.points.push_back(pt);
  }
  return out;
}

FigureOfMerit bell_probability(const Wavepacket& w, const SystemParams& p) {
  require_swap_configuration(p);
  FigureOfMerit out;
  out.xi = xi_integral(w, p);
  out.value = bell_probability_from(out.xi);
  return out;
}

std::vector<Fig2Row> sweep_fig2(std::span<const double> lambda_over_kappa, double gamma,
                                double kappa_in, const SystemParams& base) {
  validate_params(base);
  if (lambda_over_kappa.empty()) throw ParameterError("lambda_over_kappa list is empty");
  for (std::size_t i = 0; i < lambda_over_kappa.size(); ++i) {
    if (!(lambda_over_kappa[i] >= 0.0) || !std::isfinite(lambda_over_kappa[i])) {
      throw ParameterError("lambda_over_kappa values must be finite and non-negative");
    }
    if (i > 0 && !(lambda_over_kappa[i] > lambda_over_kappa[i - 1])) {
      throw ParameterError("lambda_over_kappa values must be strictly ascending");
    }
  }
  if (!(gamma >= 0.0)) throw ParameterError("gamma must be non-negative");
  const Wavepacket at_cavity = gaussian_spectrum(base.k_c, kappa_in);
  const Wavepacket at_sideband = gaussian_spectrum(base.k_c + base.kappa, kappa_in);

  std::vector<std::future<Fig2Row>> jobs;
  jobs.reserve(lambda_over_kappa.size());
  for (double ratio : lambda_over_kappa) {
    jobs.push_back(std::async(std::launch::async, [=, &base, &at_cavity, &at_sideband] {
      const SystemParams p = with_swap_coupling(base, ratio * base.kappa, gamma);
      return Fig2Row{ratio, min_swap_fidelity(at_cavity, p).value,
                     bell_probability(at_sideband, p).value};
    }));
  }
  std::vector<Fig2Row> rows;
  rows.reserve(jobs.size());
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

void write_fig2_csv(std::ostream& out, std::span<const Fig2Row> rows) {
  out << "lambda_over_kappa,F_min,P\n";
  for (const auto& r : rows) {
    out << format_double(r.lambda_over_kappa) << ',' << format_double(r.F_min) << ','
        << format_double(r.P) << '\n';
  }
}

}  // namespace cavityswap
