#include "kgu/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "kgu/error.hpp"

namespace kgu {
namespace {

// P_0..P_n at x.
std::vector<double> legendre_values(int n, double x) {
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1.0;
  if (n >= 1) p[1] = x;
  for (int k = 1; k < n; ++k) p[k + 1] = ((2.0 * k + 1.0) * x * p[k] - k * p[k - 1]) / (k + 1.0);
  return p;
}

}  // namespace

GaussLegendre gauss_legendre(int q) {
  if (q < 1) throw Error(Errc::invalid_size, "Gauss-Legendre rule needs at least one node");
  GaussLegendre rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (int i = 0; i < (q + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const auto p = legendre_values(q, x);
      dp = q * (x * p[q] - p[q - 1]) / (x * x - 1.0);
      const double dx = p[q] / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto p = legendre_values(q, x);
    dp = q * (x * p[q] - p[q - 1]) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[q - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[i] = rule.weights[q - 1 - i] = w;
  }
  if (q % 2 == 1) rule.nodes[q / 2] = 0.0;
  return rule;
}

std::vector<std::vector<double>> integration_matrix(const GaussLegendre& rule) {
  const int q = static_cast<int>(rule.nodes.size());
  // l_m(x) = w_m sum_n (n + 1/2) P_n(x_m) P_n(x), exact for the q-point rule.
  std::vector<std::vector<double>> pm(q), prim(q);
  for (int m = 0; m < q; ++m) pm[m] = legendre_values(q - 1, rule.nodes[m]);
  for (int j = 0; j < q; ++j) {
    const double x = rule.nodes[j];
    const auto p = legendre_values(q, x);
    prim[j].resize(q);
    prim[j][0] = x + 1.0;
    for (int n = 1; n < q; ++n) prim[j][n] = (p[n + 1] - p[n - 1]) / (2.0 * n + 1.0);
  }
  std::vector<std::vector<double>> s(q, std::vector<double>(q));
  for (int j = 0; j < q; ++j)
    for (int m = 0; m < q; ++m) {
      double sum = 0.0;
      for (int n = 0; n < q; ++n) sum += (n + 0.5) * pm[m][n] * prim[j][n];
      s[j][m] = rule.weights[m] * sum;
    }
  return s;
}

}  // namespace kgu
