#pragma once

#include "kgu/model.hpp"
#include "kgu/step_context.hpp"

namespace kgu {

struct OracleOptions {
  /// Gauss-Legendre nodes per panel; at least 16.
  int nodes = 16;
  /// Picard sweeps, starting from the free evolution.
  int sweeps = 3;
  /// Scales the nonlinearity; 0 gives the free flow e^{i tau A_c}.
  double coupling = 1.0;
};

/// Brute-force solution of the twisted Duhamel formula over one step
/// [p.t, p.t + tau] for the coupled (u*, v*) system.
///
/// The interval is split into panels short enough that every phase in the
/// integrand turns by at most a few radians per panel; on each panel the
/// integrand is interpolated at Gauss-Legendre nodes. The unknown solution
/// inside the integral is obtained by Picard iteration on all nodes at once.
/// Throws Errc::invalid_parameter for nodes < 16 or sweeps < 1.
TwistedPair duhamel_oracle_step(const TwistedPair& p, const StepContext& ctx,
                                const OracleOptions& options = {});

/// Real-data version (u* = v*).
SpectralField duhamel_oracle_step(const SpectralField& u, double t_n, const StepContext& ctx,
                                  const OracleOptions& options = {});

}  // namespace kgu
