#pragma once

#include <map>

#include "kgu/spectral.hpp"

namespace kgu {

/// Psi(t_n, t, v) = t e^{2ic^2 t_n} phi_1(2ic^2 t) v^3
///                + 3t e^{-2ic^2 t_n} phi_1(-2ic^2 t) |v|^2 conj(v)
///                + t e^{-4ic^2 t_n} phi_1(-4ic^2 t) conj(v)^3.
SpectralField kernel_psi(double t_n, double t, const SpectralField& v, double c,
                         Dealias dealias = Dealias::off);

/// Psi with every t phi_1(l i c^2 t) replaced by phi_2(l i c^2 tau); this is
/// tau^{-2} times the integral of Psi(t_n, s, v) over [0, tau].
SpectralField kernel_vartheta(double t_n, double tau, const SpectralField& v, double c,
                              Dealias dealias = Dealias::off);

/// Omega_l = tau^{-2} int_0^tau e^{ilc^2 s} Psi(t_n, s, v) ds in closed form,
/// for l in {-4, -2, 2}. Throws Errc::invalid_index for any other l.
SpectralField kernel_omega(double t_n, double tau, const SpectralField& v, double c, int l,
                           Dealias dealias = Dealias::off);

/// tau^{-2} int_0^tau e^{ilc^2 s} conj(Psi(t_n, s, v)) ds = conj(Omega_{-l}),
/// for l in {-4, -2}. Throws Errc::invalid_index for any other l.
SpectralField kernel_omega_bar(double t_n, double tau, const SpectralField& v, double c, int l,
                               Dealias dealias = Dealias::off);

/// The quintic correction of the second-order scheme, built from
/// (c<nabla>_c^{-1} - 1) and the half step e^{i tau A_c / 2}.
SpectralField kernel_theta(double t_n, double tau, const SpectralField& v, const MultiplierSet& m,
                           Dealias dealias = Dealias::off);

/// Second-order approximation of the oscillatory part of the Duhamel
/// integral, i.e. of int_0^tau e^{i(tau-s)A_c}( e^{2ic^2(t_n+s)} u^3 + ... ) ds.
SpectralField oscillatory_block(double tau, double t_n, const SpectralField& u,
                                const MultiplierSet& m, Dealias dealias = Dealias::off);

struct KernelBundle {
  SpectralField psi;
  SpectralField vartheta;
  std::map<int, SpectralField> omega;
  SpectralField theta;
};

/// All kernels at (t_n, tau) for one v; psi is evaluated at t = tau.
KernelBundle kernel_bundle(double t_n, double tau, const SpectralField& v, const MultiplierSet& m,
                           Dealias dealias = Dealias::off);

}  // namespace kgu
