#pragma once

#include <vector>

namespace bezmerge {

/// Gauss-Legendre rule mapped to [0, 1]. An n-node rule integrates
/// polynomials of degree <= 2n - 1 exactly.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule gauss_legendre(int n);

/// Smallest node count that is exact for polynomials of the given degree.
int gauss_nodes_for_degree(int degree);

}  // namespace bezmerge
