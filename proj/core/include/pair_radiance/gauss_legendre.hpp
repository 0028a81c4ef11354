#pragma once

#include <vector>

namespace pair_radiance {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// n-point periodic trapezoid rule on [0, 2 pi); exact for trigonometric
/// polynomials of degree < n.
QuadratureRule periodic_trapezoid(int n);

}  // namespace pair_radiance
