#pragma once

#include <vector>

namespace kgu {

/// Gauss-Legendre rule on [-1, 1], nodes ascending.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Throws Errc::invalid_size for q < 1.
GaussLegendre gauss_legendre(int q);

/// S[j][m] = int_{-1}^{x_j} l_m(x) dx for the Lagrange basis l_m on the nodes
/// of `rule`; integrates the interpolant of nodal data up to every node.
std::vector<std::vector<double>> integration_matrix(const GaussLegendre& rule);

}  // namespace kgu
