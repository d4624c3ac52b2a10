#include "cavityswap/quadrature.hpp"

#include <numbers>
#include <string>

#include "cavityswap/errors.hpp"

namespace cavityswap {

GaussLegendreRule gauss_legendre_rule(std::size_t n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * static_cast<double>(j) - 1.0) * z * p1 - (static_cast<double>(j) - 1.0) * p2) /
             static_cast<double>(j);
      }
      dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureResult integrate_composite(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, double tol, std::size_t order,
                                     int max_level) {
  const GaussLegendreRule rule = gauss_legendre_rule(order);
  auto level_sum = [&](int level) {
    const std::size_t panels = std::size_t{1} << level;
    const double h = (b - a) / static_cast<double>(panels);
    std::complex<double> total{0.0, 0.0};
    for (std::size_t p = 0; p < panels; ++p) {
      const double mid = a + (static_cast<double>(p) + 0.5) * h;
      std::complex<double> s{0.0, 0.0};
      for (std::size_t i = 0; i < order; ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
      total += 0.5 * h * s;
    }
    return total;
  };

  QuadratureResult res;
  std::complex<double> prev = level_sum(0);
  for (int level = 1; level <= max_level; ++level) {
    const std::complex<double> cur = level_sum(level);
    res.value = cur;
    res.residual = std::abs(cur - prev);
    res.level = level;
    if (res.residual < tol) return res;
    prev = cur;
  }
  throw QuadratureError("Gauss-Legendre refinement did not converge (residual " +
                            std::to_string(res.residual) + ")",
                        res.residual);
}

}  // namespace cavityswap
