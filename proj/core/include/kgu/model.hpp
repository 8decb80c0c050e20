#pragma once

#include "kgu/spectral.hpp"

namespace kgu {

/// Physical Klein-Gordon state (z, dz/dt) at time t.
struct KgState {
  SpectralField z;
  SpectralField zt;
  double t = 0.0;
};

/// First-order variables u = z - i c^{-1}<nabla>_c^{-1} z_t and the
/// analogous v built from conj(z), conj(z_t).
struct FirstOrder {
  SpectralField u;
  SpectralField v;
};

/// Twisted variables u* = e^{-ic^2 t} u, v* = e^{-ic^2 t} v.
struct TwistedPair {
  SpectralField u_star;
  SpectralField v_star;
  double t = 0.0;
  double c = 1.0;
};

FirstOrder to_first_order(const KgState& s, const MultiplierSet& m);
KgState from_first_order(const SpectralField& u, const SpectralField& v, const MultiplierSet& m,
                         double t = 0.0);

TwistedPair twist(const SpectralField& u, const SpectralField& v, double t, double c);
FirstOrder untwist(const TwistedPair& p);

/// z = (e^{ic^2 t} u* + e^{-ic^2 t} conj(v*)) / 2 at t = p.t.
SpectralField reconstruct_z(const TwistedPair& p);

/// Convenience: twist(to_first_order(s), s.t, m.c()).
TwistedPair to_twisted(const KgState& s, const MultiplierSet& m);
/// Convenience: from_first_order(untwist(p)).
KgState to_state(const TwistedPair& p, const MultiplierSet& m);

/// Pointwise |z|^2 z.
SpectralField cubic(const SpectralField& z, Dealias dealias = Dealias::off);

/// E = int c^{-2}|z_t|^2/2 + |grad z|^2/2 + c^2 z^2/2 - z^4/4 dx for real z.
///
/// Throws Errc::domain_error when z or z_t has a non-negligible imaginary part.
double energy(const KgState& s, const MultiplierSet& m);

}  // namespace kgu
