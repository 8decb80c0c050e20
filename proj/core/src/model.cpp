#include "kgu/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kgu/error.hpp"
#include "kgu/phi.hpp"

namespace kgu {
namespace {

void require_grid(const MultiplierSet& m, const SpectralField& f) {
  if (!(m.grid() == f.grid())) throw Error(Errc::shape_mismatch, "multipliers built for another grid");
}

}  // namespace

FirstOrder to_first_order(const KgState& s, const MultiplierSet& m) {
  require_same_grid(s.z, s.zt);
  require_grid(m, s.z);
  const double c = m.c();
  const auto b = m.bracket();
  RealVector inv(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) inv[j] = 1.0 / (c * b[j]);
  const Complex minus_i(0.0, -1.0);
  SpectralField u = s.z + minus_i * apply_symbol(inv, s.zt);
  SpectralField v = s.z.conj() + minus_i * apply_symbol(inv, s.zt.conj());
  return {std::move(u), std::move(v)};
}

KgState from_first_order(const SpectralField& u, const SpectralField& v, const MultiplierSet& m,
                         double t) {
  require_same_grid(u, v);
  require_grid(m, u);
  const SpectralField vbar = v.conj();
  const auto b = m.bracket();
  RealVector cb(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) cb[j] = m.c() * b[j];
  SpectralField z = 0.5 * (u + vbar);
  SpectralField zt = Complex(0.0, 0.5) * apply_symbol(cb, u - vbar);
  return {std::move(z), std::move(zt), t};
}

TwistedPair twist(const SpectralField& u, const SpectralField& v, double t, double c) {
  require_same_grid(u, v);
  const Complex w = fast_phase(-1.0, c, t);
  return {w * u, w * v, t, c};
}

FirstOrder untwist(const TwistedPair& p) {
  const Complex w = fast_phase(1.0, p.c, p.t);
  return {w * p.u_star, w * p.v_star};
}

SpectralField reconstruct_z(const TwistedPair& p) {
  require_same_grid(p.u_star, p.v_star);
  const Complex w = fast_phase(1.0, p.c, p.t);
  return 0.5 * (w * p.u_star + std::conj(w) * p.v_star.conj());
}

TwistedPair to_twisted(const KgState& s, const MultiplierSet& m) {
  auto [u, v] = to_first_order(s, m);
  return twist(u, v, s.t, m.c());
}

KgState to_state(const TwistedPair& p, const MultiplierSet& m) {
  auto [u, v] = untwist(p);
  return from_first_order(u, v, m, p.t);
}

SpectralField cubic(const SpectralField& z, Dealias dealias) {
  auto values = z.to_physical(physical_size(z.grid(), dealias));
  for (auto& x : values) x *= std::norm(x);
  return to_spectral(z.grid(), values);
}

double energy(const KgState& s, const MultiplierSet& m) {
  require_same_grid(s.z, s.zt);
  require_grid(m, s.z);
  const auto z = s.z.to_physical();
  const auto zt = s.zt.to_physical();
  double scale = 1.0;
  double worst = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    scale = std::max({scale, std::abs(z[j]), std::abs(zt[j]) / (m.c() * m.c())});
    worst = std::max({worst, std::abs(z[j].imag()), std::abs(zt[j].imag()) / (m.c() * m.c())});
  }
  if (worst > 1e-10 * scale)
    throw Error(Errc::domain_error, "energy is defined for real-valued z only");

  const double c = m.c();
  const double two_pi = 2.0 * std::numbers::pi;
  const auto lap = m.laplace();
  double kinetic = 0.0, gradient = 0.0, mass = 0.0;
  for (std::size_t j = 0; j < s.z.size(); ++j) {
    kinetic += std::norm(s.zt[j]);
    gradient += -lap[j] * std::norm(s.z[j]);
    mass += std::norm(s.z[j]);
  }
  double quartic = 0.0;
  for (const auto& x : z) {
    const double r = x.real() * x.real();
    quartic += r * r;
  }
  quartic *= two_pi / static_cast<double>(z.size());
  return two_pi * (0.5 * kinetic / (c * c) + 0.5 * gradient + 0.5 * c * c * mass) - 0.25 * quartic;
}

}  // namespace kgu
