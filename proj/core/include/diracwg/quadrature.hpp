#pragma once

#include <functional>
#include <vector>

namespace diracwg {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

/// Same rule mapped to [a, b].
GaussRule gauss_legendre(int n, double a, double b);

}  // namespace diracwg
