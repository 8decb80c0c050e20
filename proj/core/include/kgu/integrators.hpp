#pragma once

#include <string_view>
#include <utility>

#include "kgu/model.hpp"
#include "kgu/step_context.hpp"

namespace kgu {

enum class SchemeId { UEI1, UEI1_REAL, UEI2_REAL, LIE_LIMIT, STRANG_LIMIT, LARGE_C_UEI1 };

/// Short names used on the command line and in tables:
/// uei1, uei1-real, uei2, lie, strang, largec.
std::string_view scheme_name(SchemeId id) noexcept;
/// Throws Errc::invalid_parameter for unknown names.
SchemeId parse_scheme(std::string_view name);

/// Nominal convergence order of the scheme (1 or 2).
int nominal_order(SchemeId id) noexcept;

/// First-order scheme for complex data; the step starts at p.t.
TwistedPair step_uei1(const TwistedPair& p, const StepContext& ctx);

/// First-order scheme for real data (u* = v*).
SpectralField step_uei1_real(const SpectralField& u, double t_n, const StepContext& ctx);

/// Second-order scheme for real data (u* = v*).
SpectralField step_uei2_real(const SpectralField& u, double t_n, const StepContext& ctx);

/// Lie splitting for the limit Schroedinger system.
std::pair<SpectralField, SpectralField> step_lie_limit(const SpectralField& u,
                                                       const SpectralField& v,
                                                       const StepContext& ctx);

/// Strang splitting for the limit Schroedinger equation with real data.
SpectralField step_strang_limit(const SpectralField& u, const StepContext& ctx);

/// First-order scheme with the oscillatory terms dropped; meant for tau*c > 1.
TwistedPair step_largec_uei1(const TwistedPair& p, const StepContext& ctx);

/// Dispatches on `id`. Real-data schemes read p.u_star only and return
/// u* = v*. The returned time is p.t + tau.
TwistedPair step(SchemeId id, const TwistedPair& p, const StepContext& ctx);

}  // namespace kgu
