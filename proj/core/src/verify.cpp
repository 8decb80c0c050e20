#include "kgu/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "kgu/harness.hpp"
#include "kgu/integrators.hpp"
#include "kgu/kernels.hpp"
#include "kgu/oracle.hpp"
#include "kgu/phi.hpp"
#include "kgu/quadrature.hpp"

namespace kgu::verify {
namespace {

Check at_most(std::string name, double value, double limit) {
  return {std::move(name), std::isfinite(value) && value <= limit, value, limit};
}

Check at_least(std::string name, double value, double limit) {
  return {std::move(name), std::isfinite(value) && value >= limit, value, limit};
}

SpectralField abs_coeffs(const SpectralField& f, bool times_k) {
  SpectralField out(f.grid());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double k = std::abs(f.grid().wavenumber(j));
    out[j] = std::abs(f[j]) * (times_k ? k : 1.0);
  }
  return out;
}

SpectralField product(const SpectralField& a, const SpectralField& b) {
  const auto pa = a.to_physical();
  const auto pb = b.to_physical();
  ComplexVector prod(pa.size());
  for (std::size_t j = 0; j < pa.size(); ++j) prod[j] = pa[j] * pb[j];
  return to_spectral(a.grid(), prod);
}

double weighted_norm(const SpectralField& f, const RealVector& weight, double r) {
  SpectralField g(f.grid());
  for (std::size_t j = 0; j < f.size(); ++j) g[j] = f[j] * weight[j];
  return sobolev_norm(g, r);
}

struct StabilityResult {
  double chain = 0.0;     // LHS over the chain bound, must stay <= 1
  double constant = 0.0;  // LHS / (tau ||v||_r ||w||_r)
  double bilinear = 0.0;  // ||(|v| * |k||w|)||_{r-1} / (||v||_r ||w||_r)
};

// || tau^2 phi_moment(i tau lambda) (v A_c w) ||_r for the symbol lambda.
StabilityResult stability(const MultiplierSet& m, const RealVector& lambda, double tau,
                          const SpectralField& v, const SpectralField& w, double r) {
  const double c = m.c();
  const SpectralField f = product(v, apply_symbol(m.a_c(), w));
  const SpectralField conv = product(abs_coeffs(v, false), abs_coeffs(w, true));
  SpectralField lhs(f.grid());
  RealVector bound_weight(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    lhs[j] = tau * tau * phi_moment({0.0, tau * lambda[j]}) * f[j];
    bound_weight[j] = 2.0 * tau * c / std::abs(lambda[j]);
  }
  const double l = sobolev_norm(lhs, r);
  const double vw = sobolev_norm(v, r) * sobolev_norm(w, r);
  return {l / weighted_norm(conv, bound_weight, r), l / (tau * vw),
          sobolev_norm(conv, r - 1.0) / vw};
}

// Gauss-Legendre on [0, tau] with `panels` equal panels.
template <class F>
SpectralField integrate(const SpectralGrid& grid, double tau, int panels, int nodes, F&& f) {
  const GaussLegendre rule = gauss_legendre(nodes);
  const double h = tau / panels;
  SpectralField acc(grid);
  for (int p = 0; p < panels; ++p)
    for (int q = 0; q < nodes; ++q) {
      const double s = (p + 0.5 * (rule.nodes[q] + 1.0)) * h;
      acc += Complex(0.5 * h * rule.weights[q]) * f(s);
    }
  return acc;
}

// e^{i tau A_c}-propagated Duhamel integral with u*(t_n + s) replaced by
// e^{isA_c}u - (i/8) c<nabla>_c^{-1}(3s|u|^2 u + Psi(t_n, s, u)).
SpectralField expanded_duhamel(double tau, double t_n, const SpectralField& u,
                               const MultiplierSet& m) {
  const double c = m.c();
  const auto a = m.a_c();
  const double a_max = *std::max_element(a.begin(), a.end());
  const int panels = std::max(1, static_cast<int>(std::ceil(tau * (6.0 * c * c + 2.0 * a_max) / 4.0)));
  const SpectralField g = cubic(u);
  return integrate(u.grid(), tau, panels, 64, [&](double s) {
    const SpectralField corr =
        apply_symbol(m.c_inv(), Complex(3.0 * s) * g + kernel_psi(t_n, s, u, c));
    const auto w = (exp_A_c(s, m, u) + Complex(0.0, -0.125) * corr).to_physical();
    const Complex e2 = fast_phase(2.0, c, t_n + s);
    const Complex em2 = fast_phase(-2.0, c, t_n + s);
    const Complex em4 = fast_phase(-4.0, c, t_n + s);
    ComplexVector f(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Complex x = w[j];
      const Complex xb = std::conj(x);
      f[j] = e2 * x * x * x + 3.0 * em2 * std::norm(x) * xb + em4 * xb * xb * xb;
    }
    return exp_A_c(tau - s, m, to_spectral(u.grid(), f));
  });
}

std::string cname(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", c);
  return buf;
}

}  // namespace

SpectralField random_field(const SpectralGrid& grid, std::mt19937_64& rng, double decay) {
  std::normal_distribution<double> normal;
  SpectralField f(grid);
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double k = grid.wavenumber(j);
    f[j] = Complex(normal(rng), normal(rng)) * std::pow(1.0 + k * k, -0.5 * decay);
  }
  return f;
}

double loglog_slope(const std::vector<double>& tau, const std::vector<double>& err) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < tau.size(); ++i) pts.emplace_back(tau[i], err[i]);
  return fit_order(pts);
}

std::vector<Check> operator_checks(const Options& o) {
  std::vector<Check> out;
  const SpectralGrid grid = make_grid(1, o.modes);
  const double r = o.r;
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double taus[] = {1e-1, 1e-2, 1e-3};

  std::vector<double> constants;
  double bilinear = 0.0;
  for (double c : o.c_list) {
    const MultiplierSet m = make_multipliers(grid, c);
    const auto br = m.bracket();
    RealVector nr2(grid.size()), nr4(grid.size()), res(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double k = grid.wavenumber(j);
      nr2[j] = -(c * c + c * br[j]);
      nr4[j] = -(3.0 * c * c + c * br[j]);
      res[j] = 2.0 * c * c + 0.5 * k * k;
    }
    double a_excess = -1.0, iso = 0.0, cinv_excess = -1.0, exp_excess = -1.0;
    double chain = 0.0, constant = 0.0;
    for (int s = 0; s < o.samples; ++s) {
      const SpectralField f = random_field(grid, rng);
      const double t = 10.0 * unit(rng);
      const double n_r = sobolev_norm(f, r);
      const double n_r2 = sobolev_norm(f, r + 2.0);
      a_excess = std::max(a_excess, sobolev_norm(apply_symbol(m.a_c(), f), r) - 0.5 * n_r2);
      iso = std::max(iso, std::abs(sobolev_norm(exp_A_c(t, m, f), r) - n_r) / n_r);
      cinv_excess = std::max(cinv_excess, sobolev_norm(apply_symbol(m.c_inv(), f), r) - n_r);
      exp_excess = std::max(exp_excess, sobolev_norm(exp_A_c(t, m, f) - f, r) -
                                            0.5 * std::abs(t) * n_r2);

      const SpectralField w = random_field(grid, rng);
      const double tau = taus[s % 3];
      for (const RealVector* lam : {&nr2, &nr4, &res}) {
        const StabilityResult st = stability(m, *lam, tau, f, w, r);
        chain = std::max(chain, st.chain);
        constant = std::max(constant, st.constant);
        bilinear = std::max(bilinear, st.bilinear);
      }
    }
    out.push_back(at_most("A_c bound, c=" + cname(c), a_excess, 1e-10));
    out.push_back(at_most("e^{itA_c} isometry, c=" + cname(c), iso, 1e-12));
    out.push_back(at_most("c<nabla>_c^{-1} bound, c=" + cname(c), cinv_excess, 1e-12));
    out.push_back(at_most("e^{itA_c} - 1 bound, c=" + cname(c), exp_excess, 1e-10));
    out.push_back(at_most("moment stability chain, c=" + cname(c), chain, 1.0 + 1e-12));
    constants.push_back(constant);
  }
  const double worst = constants.empty() ? 0.0 : *std::max_element(constants.begin(), constants.end());
  out.push_back(at_most("moment stability constant uniform in c", worst, 4.0 * bilinear));
  return out;
}

std::vector<Check> kernel_checks(const Options& o) {
  std::vector<Check> out;
  const SpectralGrid grid = make_grid(1, o.modes);
  std::mt19937_64 rng(o.seed + 1);
  SpectralField v = random_field(grid, rng);
  v *= 1.0 / sobolev_norm(v, o.r);
  const double t_n = 0.037;
  const double tau = 0.01;
  for (double c : {1.0, 10.0}) {
    for (int l : {-4, -2, 2}) {
      const SpectralField om = kernel_omega(t_n, tau, v, c, l);
      SpectralField q = integrate(grid, tau, 1, 64, [&](double s) {
        return fast_phase(l, c, s) * kernel_psi(t_n, s, v, c);
      });
      q *= 1.0 / (tau * tau);
      out.push_back(at_most("Omega_" + std::to_string(l) + " quadrature, c=" + cname(c),
                            sobolev_norm(om - q, o.r), 1e-10));
    }
  }

  const double c = 10.0;
  const MultiplierSet m = make_multipliers(grid, c);
  const SpectralField u = to_twisted(paper_initial_data(grid, c), m).u_star;
  std::vector<double> taus, errs;
  for (int e = 6; e <= 12; ++e) {
    const double h = std::ldexp(1.0, -e);
    taus.push_back(h);
    errs.push_back(
        sobolev_norm(oscillatory_block(h, t_n, u, m) - expanded_duhamel(h, t_n, u, m), o.r));
  }
  out.push_back(at_least("oscillatory block vs quadrature slope, c=10", loglog_slope(taus, errs), 2.7));
  return out;
}

std::vector<Check> local_order_checks(const Options& o) {
  std::vector<Check> out;
  const SpectralGrid grid = make_grid(1, o.modes);
  for (double c : {1.0, 100.0}) {
    const MultiplierSet m = make_multipliers(grid, c);
    const SpectralField u = to_twisted(paper_initial_data(grid, c), m).u_star;
    std::vector<double> taus, d1, d2;
    for (int e = 6; e <= 12; ++e) {
      const StepContext ctx(m, std::ldexp(1.0, -e));
      const SpectralField ref = duhamel_oracle_step(u, 0.0, ctx);
      taus.push_back(ctx.tau());
      d1.push_back(sobolev_norm(step_uei1_real(u, 0.0, ctx) - ref, o.r));
      d2.push_back(sobolev_norm(step_uei2_real(u, 0.0, ctx) - ref, o.r));
    }
    out.push_back(at_least("first-order local defect slope, c=" + cname(c), loglog_slope(taus, d1), 1.8));
    out.push_back(at_least("second-order local defect slope, c=" + cname(c), loglog_slope(taus, d2), 2.7));
  }
  return out;
}

std::vector<Check> run_all(const Options& options) {
  std::vector<Check> all = operator_checks(options);
  for (auto&& part : {kernel_checks(options), local_order_checks(options)})
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

}  // namespace kgu::verify
