#pragma once

#include <span>

#include "kgu/spectral.hpp"

namespace kgu {

/// phi_0(z) = e^z, phi_1(z) = (e^z - 1)/z, phi_2(z) = (e^z - 1 - z)/z^2.
///
/// Below |z| < phi_taylor_threshold the functions are summed from their
/// Taylor series. Throws Errc::invalid_index for j outside {0, 1, 2}.
Complex phi(int j, Complex z);

inline constexpr double phi_taylor_threshold = 1e-2;

/// int_0^1 theta e^{theta z} d theta = phi_1(z) - phi_2(z) = (e^z - phi_1(z))/z,
/// so that int_0^tau s e^{as} ds = tau^2 phi_moment(a tau).
Complex phi_moment(Complex z);

/// Applies phi_j(z_symbol[k]) to every coefficient of `f`.
SpectralField phi_of_operator(int j, std::span<const Complex> z_symbol, const SpectralField& f);

/// e^{i l c^2 t}, with the argument reduced modulo 2*pi in extended precision.
Complex fast_phase(double l, double c, double t);

/// (phi_1(i(l+m)x) - phi_1(ilx)) / (i m x) for m != 0.
///
/// For small arguments the quotient is summed as a power series in x; its
/// value at x = 0 is 1/2.
Complex phi1_quotient(int l, int m, double x);

}  // namespace kgu
