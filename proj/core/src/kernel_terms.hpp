#pragma once

#include "kgu/spectral.hpp"
#include "kgu/step_context.hpp"

namespace kgu::detail {

struct Phases {
  Complex p2, m2, m4;  // e^{2ic^2 t}, e^{-2ic^2 t}, e^{-4ic^2 t}
};

Phases phases_at(double c, double t);

/// a v^3 + 3 b |v|^2 conj(v) + d conj(v)^3, pointwise.
ComplexVector cubic_family(const ComplexVector& v, Complex a, Complex b, Complex d);

/// Physical values of Omega_l for l in {-4, -2, 2, 4}.
ComplexVector omega_values(const StepOperators& ops, const Phases& ph, int l,
                           const ComplexVector& v);

/// theta(U) given the nodal values of U and the coefficients of |U|^2 U.
SpectralField theta(const StepContext& ctx, const ComplexVector& U, const SpectralField& cubic_hat);

/// I^1(tau, t_n, u) given u's coefficients and nodal values.
SpectralField oscillatory_block(const StepContext& ctx, double t_n, const SpectralField& u_hat,
                                const ComplexVector& u);

}  // namespace kgu::detail
