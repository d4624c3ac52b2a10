#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace cavityswap {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre_rule(std::size_t n);

struct QuadratureResult {
  std::complex<double> value;
  double residual = 0.0;  // |I_level - I_{level-1}| at termination
  int level = 0;          // the final rule used 2^level panels
};

/// Composite Gauss-Legendre on [a, b], doubling the panel count until two
/// successive levels agree to `tol`. Throws QuadratureError otherwise.
QuadratureResult integrate_composite(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, double tol = 1e-10,
                                     std::size_t order = 20, int max_level = 14);

}  // namespace cavityswap
