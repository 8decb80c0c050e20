#pragma once

#include <cstdint>
#include <functional>

#include "kgu/integrators.hpp"

namespace kgu {

/// Called after every step with the step index (1-based) and the new state.
using StepCallback = std::function<void(std::int64_t, const TwistedPair&)>;

/// Number of steps of size tau that make up T. Throws
/// Errc::invalid_parameter unless T / tau is a nonnegative integer.
std::int64_t step_count(double T, double tau);

/// Advances `p` by T with the given scheme. Step n starts at
/// t_n = p.t + n*tau, computed as a product rather than a running sum.
TwistedPair evolve(SchemeId scheme, const TwistedPair& p, double T, const StepContext& ctx,
                   const StepCallback& callback = {});

struct ReferenceOptions {
  /// The reference step is T * 2^{-refinement}.
  int refinement = 16;
  /// Largest accepted H^r distance between the tau_ref and 2 tau_ref runs.
  double tolerance = 1e-9;
  double r = 1.0;
  Dealias dealias = Dealias::off;
};

struct Reference {
  TwistedPair pair;
  /// H^r distance of the reconstructed z between the tau_ref and 2 tau_ref runs.
  double certificate = 0.0;
  double tau = 0.0;
};

/// Fine-step second-order solution at time s0.t + T, certified by comparison
/// with the run at twice the step. Throws Errc::reference_unreliable when the
/// certificate exceeds options.tolerance.
Reference reference_solution(const KgState& s0, const MultiplierSet& m, double T,
                             const ReferenceOptions& options = {});

}  // namespace kgu
