#pragma once

#include <vector>

namespace zonal {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss rule for the weight t^c e^{-t} on (0, inf), c > -1.
QuadratureRule gauss_laguerre(int n, double c);

/// n-point Gauss rule for the weight v^b (1 - v)^a on (0, 1), a, b > -1.
QuadratureRule gauss_jacobi01(int n, double a, double b);

}  // namespace zonal
