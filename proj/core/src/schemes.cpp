#include "kgu/integrators.hpp"

#include <array>

#include "kernel_terms.hpp"
#include "kgu/error.hpp"

namespace kgu {
namespace {

constexpr std::array<std::pair<SchemeId, std::string_view>, 6> names{{
    {SchemeId::UEI1, "uei1"},
    {SchemeId::UEI1_REAL, "uei1-real"},
    {SchemeId::UEI2_REAL, "uei2"},
    {SchemeId::LIE_LIMIT, "lie"},
    {SchemeId::STRANG_LIMIT, "strang"},
    {SchemeId::LARGE_C_UEI1, "largec"},
}};

const Complex I(0.0, 1.0);

void require_grid(const StepContext& ctx, const SpectralField& f) {
  if (!(ctx.grid() == f.grid()))
    throw Error(Errc::shape_mismatch, "step context built for another grid");
}

// e^{-i tau/8 (|u|^2 + 2|v|^2)} u, and the same with u and v exchanged.
std::pair<ComplexVector, ComplexVector> phase_rotations(const ComplexVector& u,
                                                        const ComplexVector& v, double tau) {
  ComplexVector pu(u.size()), pv(v.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double a = std::norm(u[j]);
    const double b = std::norm(v[j]);
    pu[j] = std::polar(1.0, -tau / 8.0 * (a + 2.0 * b)) * u[j];
    pv[j] = std::polar(1.0, -tau / 8.0 * (b + 2.0 * a)) * v[j];
  }
  return {std::move(pu), std::move(pv)};
}

SpectralField multiply(std::span<const Complex> symbol, const SpectralField& f) {
  return apply_symbol(symbol, f);
}

// One component of the fused first-order step; `w` is the partner field.
SpectralField uei1_component(const StepContext& ctx, const detail::Phases& ph,
                             const ComplexVector& x, const ComplexVector& w) {
  const auto& ops = ctx.ops();
  const double tau = ctx.tau();
  const std::size_t M = x.size();
  ComplexVector p(M), q(M);
  const Complex a = ph.p2 * ops.phi1_p2;
  const Complex b = ph.m2 * ops.phi1_m2;
  const Complex d = ph.m4 * ops.phi1_m4;
  for (std::size_t j = 0; j < M; ++j) {
    const double xx = std::norm(x[j]);
    const double ww = std::norm(w[j]);
    const double n = xx + 2.0 * ww;
    const Complex wb = std::conj(w[j]);
    p[j] = std::polar(1.0, -tau / 8.0 * n) * x[j] + I * (tau / 8.0) * n * x[j];
    q[j] = n * x[j] + a * x[j] * x[j] * w[j] + b * (2.0 * xx + ww) * wb +
           d * wb * wb * std::conj(x[j]);
  }
  const SpectralField fp = to_spectral(ctx.grid(), p);
  const SpectralField fq = to_spectral(ctx.grid(), q);
  SpectralField out(ctx.grid());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = ops.e_tau[j] * (fp[j] - I * (tau / 8.0) * ops.c_inv[j] * fq[j]);
  return out;
}

}  // namespace

std::string_view scheme_name(SchemeId id) noexcept {
  for (const auto& [s, n] : names)
    if (s == id) return n;
  return "unknown";
}

SchemeId parse_scheme(std::string_view name) {
  for (const auto& [s, n] : names)
    if (n == name) return s;
  throw Error(Errc::invalid_parameter, "unknown scheme '" + std::string(name) + "'");
}

int nominal_order(SchemeId id) noexcept {
  return id == SchemeId::UEI2_REAL || id == SchemeId::STRANG_LIMIT ? 2 : 1;
}

TwistedPair step_uei1(const TwistedPair& p, const StepContext& ctx) {
  require_same_grid(p.u_star, p.v_star);
  require_grid(ctx, p.u_star);
  const std::size_t M = ctx.physical_size();
  const ComplexVector u = p.u_star.to_physical(M);
  const ComplexVector v = p.v_star.to_physical(M);
  const detail::Phases ph = detail::phases_at(ctx.c(), p.t);
  return {uei1_component(ctx, ph, u, v), uei1_component(ctx, ph, v, u), p.t + ctx.tau(), p.c};
}

SpectralField step_uei1_real(const SpectralField& u_hat, double t_n, const StepContext& ctx) {
  require_grid(ctx, u_hat);
  const ComplexVector u = u_hat.to_physical(ctx.physical_size());
  return uei1_component(ctx, detail::phases_at(ctx.c(), t_n), u, u);
}

SpectralField step_uei2_real(const SpectralField& u_hat, double t_n, const StepContext& ctx) {
  require_grid(ctx, u_hat);
  const auto& ops = ctx.ops();
  const auto& grid = ctx.grid();
  const std::size_t n = grid.size();
  const std::size_t M = ctx.physical_size();
  const double tau = ctx.tau();
  const double tau2 = tau * tau;
  const detail::Phases ph = detail::phases_at(ctx.c(), t_n);

  const ComplexVector u = u_hat.to_physical(M);
  const ComplexVector U = multiply(ops.e_half, u_hat).to_physical(M);

  ComplexVector rotated(M), g(M);
  for (std::size_t j = 0; j < M; ++j) {
    const double a2 = std::norm(U[j]);
    rotated[j] = std::polar(1.0, -tau * (3.0 / 8.0) * a2) * U[j];
    g[j] = a2 * U[j];
  }
  const SpectralField f_rot = to_spectral(grid, rotated);
  const SpectralField f_g = to_spectral(grid, g);
  const SpectralField th = detail::theta(ctx, U, f_g);

  // c<nabla>_c^{-1} vartheta(t_n, tau, u) at the nodes.
  const ComplexVector vt = detail::cubic_family(u, ph.p2 * ops.phi2_p2, ph.m2 * ops.phi2_m2,
                                                ph.m4 * ops.phi2_m4);
  const ComplexVector w = apply_symbol(ops.c_inv, to_spectral(grid, vt)).to_physical(M);
  ComplexVector corr(M);
  for (std::size_t j = 0; j < M; ++j)
    corr[j] = 2.0 * std::norm(u[j]) * w[j] - u[j] * u[j] * std::conj(w[j]);
  const SpectralField f_corr = to_spectral(grid, corr);

  const SpectralField osc = detail::oscillatory_block(ctx, t_n, u_hat, u);

  SpectralField out(grid);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = ops.e_half[j] * (f_rot[j] - tau * (3.0 / 8.0) * I * ops.cm1[j] * f_g[j]) +
             tau2 * th[j] -
             ops.c_inv[j] * (tau2 * (3.0 / 64.0) * f_corr[j] + (I / 8.0) * osc[j]);
  }
  return out;
}

std::pair<SpectralField, SpectralField> step_lie_limit(const SpectralField& u_hat,
                                                       const SpectralField& v_hat,
                                                       const StepContext& ctx) {
  require_same_grid(u_hat, v_hat);
  require_grid(ctx, u_hat);
  const std::size_t M = ctx.physical_size();
  auto [pu, pv] = phase_rotations(u_hat.to_physical(M), v_hat.to_physical(M), ctx.tau());
  const auto& lie = ctx.ops().lie;
  return {multiply(lie, to_spectral(ctx.grid(), pu)), multiply(lie, to_spectral(ctx.grid(), pv))};
}

SpectralField step_strang_limit(const SpectralField& u_hat, const StepContext& ctx) {
  require_grid(ctx, u_hat);
  const auto& half = ctx.ops().strang_half;
  ComplexVector U = multiply(half, u_hat).to_physical(ctx.physical_size());
  const double tau = ctx.tau();
  for (auto& x : U) x *= std::polar(1.0, -tau * (3.0 / 8.0) * std::norm(x));
  return multiply(half, to_spectral(ctx.grid(), U));
}

TwistedPair step_largec_uei1(const TwistedPair& p, const StepContext& ctx) {
  require_same_grid(p.u_star, p.v_star);
  require_grid(ctx, p.u_star);
  const std::size_t M = ctx.physical_size();
  auto [pu, pv] = phase_rotations(p.u_star.to_physical(M), p.v_star.to_physical(M), ctx.tau());
  const auto& e = ctx.ops().e_tau;
  return {multiply(e, to_spectral(ctx.grid(), pu)), multiply(e, to_spectral(ctx.grid(), pv)),
          p.t + ctx.tau(), p.c};
}

TwistedPair step(SchemeId id, const TwistedPair& p, const StepContext& ctx) {
  const double t = p.t + ctx.tau();
  switch (id) {
    case SchemeId::UEI1: return step_uei1(p, ctx);
    case SchemeId::LARGE_C_UEI1: return step_largec_uei1(p, ctx);
    case SchemeId::LIE_LIMIT: {
      auto [u, v] = step_lie_limit(p.u_star, p.v_star, ctx);
      return {std::move(u), std::move(v), t, p.c};
    }
    case SchemeId::UEI1_REAL: {
      SpectralField u = step_uei1_real(p.u_star, p.t, ctx);
      return {u, u, t, p.c};
    }
    case SchemeId::UEI2_REAL: {
      SpectralField u = step_uei2_real(p.u_star, p.t, ctx);
      return {u, u, t, p.c};
    }
    case SchemeId::STRANG_LIMIT: {
      SpectralField u = step_strang_limit(p.u_star, ctx);
      return {u, u, t, p.c};
    }
  }
  throw Error(Errc::invalid_parameter, "unknown scheme id");
}

}  // namespace kgu
