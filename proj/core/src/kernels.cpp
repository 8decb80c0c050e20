#include "kgu/kernels.hpp"

#include "kernel_terms.hpp"
#include "kgu/error.hpp"
#include "kgu/model.hpp"
#include "kgu/phi.hpp"
#include "kgu/step_context.hpp"

namespace kgu {
namespace detail {

Phases phases_at(double c, double t) {
  return {fast_phase(2.0, c, t), fast_phase(-2.0, c, t), fast_phase(-4.0, c, t)};
}

ComplexVector cubic_family(const ComplexVector& v, Complex a, Complex b, Complex d) {
  ComplexVector out(v.size());
  const Complex b3 = 3.0 * b;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const Complex x = v[j];
    const Complex xb = std::conj(x);
    out[j] = a * x * x * x + b3 * std::norm(x) * xb + d * xb * xb * xb;
  }
  return out;
}

ComplexVector omega_values(const StepOperators& ops, const Phases& ph, int l,
                           const ComplexVector& v) {
  return cubic_family(v, ph.p2 * ops.omega_quotient(l, 2), ph.m2 * ops.omega_quotient(l, -2),
                      ph.m4 * ops.omega_quotient(l, -4));
}

SpectralField theta(const StepContext& ctx, const ComplexVector& U,
                    const SpectralField& cubic_hat) {
  const auto& ops = ctx.ops();
  const auto& grid = ctx.grid();
  const std::size_t n = grid.size();
  const std::size_t M = U.size();

  SpectralField h = apply_symbol(ops.cm1, cubic_hat);
  const ComplexVector hp = h.to_physical(M);

  ComplexVector quintic(M), q1(M), q2(M);
  for (std::size_t j = 0; j < M; ++j) {
    const double a2 = std::norm(U[j]);
    quintic[j] = a2 * a2 * U[j];
    q1[j] = a2 * hp[j];
    q2[j] = U[j] * U[j] * std::conj(hp[j]);
  }
  const SpectralField f0 = to_spectral(grid, quintic);
  const SpectralField f1 = to_spectral(grid, q1);
  const SpectralField f2 = to_spectral(grid, q2);
  SpectralField out(grid);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = ops.e_half[j] * (-(9.0 / 128.0) * ops.cm1[j] * f0[j] +
                              ops.c_inv[j] * (-(9.0 / 64.0) * f1[j] + (9.0 / 128.0) * f2[j]));
  }
  return out;
}

SpectralField oscillatory_block(const StepContext& ctx, double t_n, const SpectralField& u_hat,
                                const ComplexVector& u) {
  const auto& ops = ctx.ops();
  const auto& grid = ctx.grid();
  const std::size_t n = grid.size();
  const std::size_t M = u.size();
  const double tau = ctx.tau();
  const Phases ph = phases_at(ctx.c(), t_n);
  const Complex I(0.0, 1.0);

  const ComplexVector Au = apply_symbol(ops.a_c, u_hat).to_physical(M);
  ComplexVector u3(M), g(M), gb(M), x2(M), x4(M);
  for (std::size_t j = 0; j < M; ++j) {
    const Complex x = u[j];
    const Complex xb = std::conj(x);
    const double a2 = std::norm(x);
    u3[j] = x * x * x;
    g[j] = a2 * x;
    gb[j] = a2 * xb;
    x2[j] = 3.0 * x * x * Au[j];
    x4[j] = xb * xb * Au[j] - 2.0 * a2 * std::conj(Au[j]);
  }
  const SpectralField f_u3 = to_spectral(grid, u3);
  const SpectralField f_ub3 = f_u3.conj();
  const SpectralField f_gb = to_spectral(grid, gb);
  const SpectralField f_x2 = to_spectral(grid, x2);
  const SpectralField f_x6 = f_x2.conj();
  const SpectralField f_x4 = to_spectral(grid, x4);

  const double tau2 = tau * tau;
  SpectralField out(grid);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex res = ph.p2 * (tau * ops.phi1_res[j] * f_u3[j] +
                                 I * tau2 * ops.mom_res[j] *
                                     (ops.res_shift[j] * f_u3[j] + f_x2[j]));
    const Complex nr2 = ph.m2 * (3.0 * tau * ops.phi1_nr2[j] * f_gb[j] +
                                 3.0 * I * tau2 * ops.mom_nr2[j] * f_x4[j]);
    const Complex nr4 = ph.m4 * (tau * ops.phi1_nr4[j] * f_ub3[j] -
                                 I * tau2 * ops.mom_nr4[j] * f_x6[j]);
    out[j] = ops.e_tau[j] * (res + nr2 + nr4);
  }

  // tau^2 corrections from the first-order expansion of u inside the integral.
  auto smoothed = [&](Complex moment, int l) {
    ComplexVector w = omega_values(ops, ph, l, u);
    for (std::size_t j = 0; j < M; ++j) w[j] += 3.0 * moment * g[j];
    return apply_symbol(ops.c_inv, to_spectral(grid, w)).to_physical(M);
  };
  const ComplexVector b2 = smoothed(ops.mom_p2, 2);
  const ComplexVector bm2 = smoothed(ops.mom_m2, -2);
  const ComplexVector b4 = smoothed(ops.mom_p4, 4);
  const Complex k2 = -tau2 * (3.0 / 8.0) * I * ph.p2;
  const Complex km2 = -tau2 * (3.0 / 8.0) * I * ph.m2;
  const Complex km2b = tau2 * (6.0 / 8.0) * I * ph.m2;
  const Complex km4 = tau2 * (3.0 / 8.0) * I * ph.m4;
  ComplexVector p(M);
  for (std::size_t j = 0; j < M; ++j) {
    const Complex x = u[j];
    const Complex xb = std::conj(x);
    p[j] = k2 * x * x * b2[j] + km2 * xb * xb * bm2[j] + km2b * std::norm(x) * std::conj(b2[j]) +
           km4 * xb * xb * std::conj(b4[j]);
  }
  out += to_spectral(grid, p);
  return out;
}

}  // namespace detail

namespace {

void require_omega_index(int l, std::initializer_list<int> allowed) {
  for (int a : allowed)
    if (a == l) return;
  throw Error(Errc::invalid_index, "unsupported phase index l = " + std::to_string(l));
}

void require_tau(double tau) {
  if (!(tau > 0.0)) throw Error(Errc::invalid_parameter, "tau must be positive");
}

ComplexVector omega_direct(double t_n, double tau, const ComplexVector& v, double c, int l) {
  const double x = c * c * tau;
  const detail::Phases ph = detail::phases_at(c, t_n);
  return detail::cubic_family(v, ph.p2 * phi1_quotient(l, 2, x), ph.m2 * phi1_quotient(l, -2, x),
                              ph.m4 * phi1_quotient(l, -4, x));
}

}  // namespace

SpectralField kernel_psi(double t_n, double t, const SpectralField& v, double c, Dealias dealias) {
  if (!(t >= 0.0)) throw Error(Errc::invalid_parameter, "t must be nonnegative");
  const detail::Phases ph = detail::phases_at(c, t_n);
  const double x = c * c * t;
  const auto values = detail::cubic_family(
      v.to_physical(physical_size(v.grid(), dealias)), t * ph.p2 * phi(1, {0.0, 2.0 * x}),
      t * ph.m2 * phi(1, {0.0, -2.0 * x}), t * ph.m4 * phi(1, {0.0, -4.0 * x}));
  return to_spectral(v.grid(), values);
}

SpectralField kernel_vartheta(double t_n, double tau, const SpectralField& v, double c,
                              Dealias dealias) {
  require_tau(tau);
  const detail::Phases ph = detail::phases_at(c, t_n);
  const double x = c * c * tau;
  const auto values = detail::cubic_family(
      v.to_physical(physical_size(v.grid(), dealias)), ph.p2 * phi(2, {0.0, 2.0 * x}),
      ph.m2 * phi(2, {0.0, -2.0 * x}), ph.m4 * phi(2, {0.0, -4.0 * x}));
  return to_spectral(v.grid(), values);
}

SpectralField kernel_omega(double t_n, double tau, const SpectralField& v, double c, int l,
                           Dealias dealias) {
  require_omega_index(l, {-4, -2, 2});
  require_tau(tau);
  return to_spectral(v.grid(),
                     omega_direct(t_n, tau, v.to_physical(physical_size(v.grid(), dealias)), c, l));
}

SpectralField kernel_omega_bar(double t_n, double tau, const SpectralField& v, double c, int l,
                               Dealias dealias) {
  require_omega_index(l, {-4, -2});
  require_tau(tau);
  auto values = omega_direct(t_n, tau, v.to_physical(physical_size(v.grid(), dealias)), c, -l);
  for (auto& x : values) x = std::conj(x);
  return to_spectral(v.grid(), values);
}

SpectralField kernel_theta(double, double tau, const SpectralField& v, const MultiplierSet& m,
                           Dealias dealias) {
  require_same_grid(v, SpectralField(m.grid()));
  const StepContext ctx(m, tau, 1.0, dealias);
  const ComplexVector vp = v.to_physical(ctx.physical_size());
  return detail::theta(ctx, vp, cubic(v, dealias));
}

SpectralField oscillatory_block(double tau, double t_n, const SpectralField& u,
                                const MultiplierSet& m, Dealias dealias) {
  require_same_grid(u, SpectralField(m.grid()));
  const StepContext ctx(m, tau, 1.0, dealias);
  return detail::oscillatory_block(ctx, t_n, u, u.to_physical(ctx.physical_size()));
}

KernelBundle kernel_bundle(double t_n, double tau, const SpectralField& v, const MultiplierSet& m,
                           Dealias dealias) {
  KernelBundle b;
  b.psi = kernel_psi(t_n, tau, v, m.c(), dealias);
  b.vartheta = kernel_vartheta(t_n, tau, v, m.c(), dealias);
  for (int l : {-4, -2, 2}) b.omega.emplace(l, kernel_omega(t_n, tau, v, m.c(), l, dealias));
  b.theta = kernel_theta(t_n, tau, v, m, dealias);
  return b;
}

}  // namespace kgu
