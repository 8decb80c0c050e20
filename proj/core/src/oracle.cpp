#include "kgu/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "kgu/error.hpp"
#include "kgu/phi.hpp"
#include "kgu/quadrature.hpp"

namespace kgu {
namespace {

struct Node {
  double sigma;
  double weight;  // quadrature weight on the panel
};

struct Layout {
  std::vector<Node> nodes;
  std::size_t per_panel = 0;
  std::vector<std::vector<double>> s;  // integration matrix scaled to a panel
};

Layout make_layout(const StepContext& ctx, int q) {
  const auto a = ctx.multipliers().a_c();
  const double a_max = *std::max_element(a.begin(), a.end());
  const double c2 = ctx.c() * ctx.c();
  const double spread = 4.0 * c2 + 4.0 * a_max + 1.0;
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(ctx.tau() * spread / 4.0)));
  const double h = ctx.tau() / static_cast<double>(panels);
  const GaussLegendre rule = gauss_legendre(q);
  Layout out;
  out.per_panel = static_cast<std::size_t>(q);
  out.s = integration_matrix(rule);
  for (auto& row : out.s)
    for (auto& x : row) x *= 0.5 * h;
  for (std::size_t p = 0; p < panels; ++p)
    for (int j = 0; j < q; ++j)
      out.nodes.push_back({(static_cast<double>(p) + 0.5 * (rule.nodes[j] + 1.0)) * h,
                           0.5 * h * rule.weights[j]});
  return out;
}

// W(sigma) = c<nabla>_c^{-1} e^{-i sigma A_c} e^{-ic^2(t_n+sigma)} f(z) for both components,
// given the interaction-picture coefficients y = e^{-i sigma A_c} u*.
void integrand(const StepContext& ctx, double t_n, double sigma, const SpectralField& yu,
               const SpectralField* yv, double coupling, SpectralField& wu, SpectralField* wv) {
  const auto a = ctx.multipliers().a_c();
  const auto cinv = ctx.multipliers().c_inv();
  const std::size_t n = yu.size();
  const std::size_t M = ctx.physical_size();
  SpectralField su(ctx.grid());
  for (std::size_t j = 0; j < n; ++j) su[j] = std::polar(1.0, sigma * a[j]) * yu[j];
  const ComplexVector u = su.to_physical(M);
  ComplexVector v;
  if (yv != nullptr) {
    SpectralField sv(ctx.grid());
    for (std::size_t j = 0; j < n; ++j) sv[j] = std::polar(1.0, sigma * a[j]) * (*yv)[j];
    v = sv.to_physical(M);
  }
  const Complex e = fast_phase(1.0, ctx.c(), t_n + sigma);
  const Complex scale = coupling / 8.0 * std::conj(e);
  ComplexVector fu(M), fv(yv != nullptr ? M : 0);
  for (std::size_t j = 0; j < M; ++j) {
    const Complex vbar = std::conj(yv != nullptr ? v[j] : u[j]);
    const Complex w = e * u[j] + std::conj(e) * vbar;
    const double w2 = std::norm(w);
    fu[j] = scale * w2 * w;
    if (yv != nullptr) fv[j] = scale * w2 * std::conj(w);
  }
  wu = to_spectral(ctx.grid(), fu);
  for (std::size_t j = 0; j < n; ++j) wu[j] *= cinv[j] * std::polar(1.0, -sigma * a[j]);
  if (yv != nullptr) {
    *wv = to_spectral(ctx.grid(), fv);
    for (std::size_t j = 0; j < n; ++j) (*wv)[j] *= cinv[j] * std::polar(1.0, -sigma * a[j]);
  }
}

// Picard iteration for y' = -i W(y) on the node layout; returns y(tau) for each component.
std::vector<SpectralField> solve(const StepContext& ctx, double t_n,
                                 const std::vector<SpectralField>& y0,
                                 const OracleOptions& opt) {
  if (opt.nodes < 16) throw Error(Errc::invalid_parameter, "oracle needs at least 16 nodes");
  if (opt.sweeps < 1) throw Error(Errc::invalid_parameter, "oracle needs at least one sweep");
  const Layout layout = make_layout(ctx, opt.nodes);
  const std::size_t total = layout.nodes.size();
  const std::size_t comps = y0.size();
  const std::size_t n = ctx.grid().size();
  const std::size_t q = layout.per_panel;
  const Complex minus_i(0.0, -1.0);

  std::vector<std::vector<SpectralField>> y(comps, std::vector<SpectralField>(total));
  for (std::size_t c = 0; c < comps; ++c)
    for (auto& f : y[c]) f = y0[c];
  std::vector<std::vector<SpectralField>> w(comps, std::vector<SpectralField>(total));
  std::vector<SpectralField> end = y0;

  for (int sweep = 0; sweep < opt.sweeps; ++sweep) {
    for (std::size_t k = 0; k < total; ++k) {
      if (comps == 2)
        integrand(ctx, t_n, layout.nodes[k].sigma, y[0][k], &y[1][k], opt.coupling, w[0][k],
                  &w[1][k]);
      else
        integrand(ctx, t_n, layout.nodes[k].sigma, y[0][k], nullptr, opt.coupling, w[0][k],
                  nullptr);
    }
    for (std::size_t c = 0; c < comps; ++c) {
      ComplexVector acc(n);
      for (std::size_t start = 0; start < total; start += q) {
        for (std::size_t j = 0; j < q; ++j) {
          ComplexVector local = acc;
          for (std::size_t m = 0; m < q; ++m) {
            const double s = layout.s[j][m];
            const auto& wm = w[c][start + m];
            for (std::size_t i = 0; i < n; ++i) local[i] += s * wm[i];
          }
          auto& target = y[c][start + j];
          for (std::size_t i = 0; i < n; ++i) target[i] = y0[c][i] + minus_i * local[i];
        }
        for (std::size_t m = 0; m < q; ++m) {
          const double wt = layout.nodes[start + m].weight;
          const auto& wm = w[c][start + m];
          for (std::size_t i = 0; i < n; ++i) acc[i] += wt * wm[i];
        }
      }
      for (std::size_t i = 0; i < n; ++i) end[c][i] = y0[c][i] + minus_i * acc[i];
    }
  }
  for (auto& f : end) f = exp_A_c(ctx.tau(), ctx.multipliers(), f);
  return end;
}

}  // namespace

TwistedPair duhamel_oracle_step(const TwistedPair& p, const StepContext& ctx,
                                const OracleOptions& options) {
  require_same_grid(p.u_star, p.v_star);
  auto out = solve(ctx, p.t, {p.u_star, p.v_star}, options);
  return {std::move(out[0]), std::move(out[1]), p.t + ctx.tau(), p.c};
}

SpectralField duhamel_oracle_step(const SpectralField& u, double t_n, const StepContext& ctx,
                                  const OracleOptions& options) {
  auto out = solve(ctx, t_n, {u}, options);
  return std::move(out[0]);
}

}  // namespace kgu
