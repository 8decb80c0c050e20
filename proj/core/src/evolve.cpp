#include "kgu/evolve.hpp"

#include <cmath>
#include <sstream>

#include "kgu/error.hpp"

namespace kgu {

std::int64_t step_count(double T, double tau) {
  if (!(tau > 0.0) || !(T >= 0.0) || !std::isfinite(T))
    throw Error(Errc::invalid_parameter, "need T >= 0 and tau > 0");
  const double ratio = T / tau;
  const double n = std::round(ratio);
  if (std::abs(ratio - n) > 1e-9 * std::max(1.0, n)) {
    std::ostringstream msg;
    msg << "T = " << T << " is not an integer multiple of tau = " << tau;
    throw Error(Errc::invalid_parameter, msg.str());
  }
  return static_cast<std::int64_t>(n);
}

TwistedPair evolve(SchemeId scheme, const TwistedPair& p, double T, const StepContext& ctx,
                   const StepCallback& callback) {
  const std::int64_t steps = step_count(T, ctx.tau());
  const double t0 = p.t;
  TwistedPair state = p;
  for (std::int64_t n = 0; n < steps; ++n) {
    state.t = t0 + static_cast<double>(n) * ctx.tau();
    state = step(scheme, state, ctx);
    state.t = t0 + static_cast<double>(n + 1) * ctx.tau();
    if (callback) callback(n + 1, state);
  }
  return state;
}

Reference reference_solution(const KgState& s0, const MultiplierSet& m, double T,
                             const ReferenceOptions& options) {
  if (!(T > 0.0)) throw Error(Errc::invalid_parameter, "reference horizon must be positive");
  if (options.refinement < 1)
    throw Error(Errc::invalid_parameter, "reference refinement must be at least 1");
  const double tau = std::ldexp(T, -options.refinement);
  const TwistedPair start = to_twisted(s0, m);
  const StepContext fine(m, tau, options.r, options.dealias);
  const StepContext coarse(m, 2.0 * tau, options.r, options.dealias);
  Reference ref;
  ref.pair = evolve(SchemeId::UEI2_REAL, start, T, fine);
  const TwistedPair check = evolve(SchemeId::UEI2_REAL, start, T, coarse);
  ref.certificate = sobolev_norm(reconstruct_z(ref.pair) - reconstruct_z(check), options.r);
  ref.tau = tau;
  if (!(ref.certificate <= options.tolerance)) {
    std::ostringstream msg;
    msg << "reference self-convergence " << ref.certificate << " exceeds " << options.tolerance
        << " (c = " << m.c() << ", tau = " << tau << ")";
    throw Error(Errc::reference_unreliable, msg.str());
  }
  return ref;
}

}  // namespace kgu
