#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kgu/spectral.hpp"

namespace kgu::verify {

struct Check {
  std::string name;
  bool passed = false;
  /// Measured quantity and the limit it was compared against.
  double value = 0.0;
  double limit = 0.0;
};

struct Options {
  int samples = 100;
  int modes = 32;
  double r = 1.0;
  std::vector<double> c_list{1.0, 10.0, 100.0, 1e4};
  std::uint64_t seed = 0x6b67754bULL;
};

/// Random field with coefficients drawn from N(0,1) + iN(0,1), damped by
/// (1 + k^2)^{-decay/2}.
SpectralField random_field(const SpectralGrid& grid, std::mt19937_64& rng, double decay = 4.0);

/// Multiplier bounds (A_c, c<nabla>_c^{-1}, e^{itA_c}) and the stability
/// bounds of the tau^2 moment terms, on random fields for every c.
std::vector<Check> operator_checks(const Options& options = {});

/// Omega against quadrature of its defining integral, and the oscillatory
/// block against quadrature of the expanded Duhamel integral.
std::vector<Check> kernel_checks(const Options& options = {});

/// Local defect slopes of the first- and second-order schemes against the
/// Duhamel oracle.
std::vector<Check> local_order_checks(const Options& options = {});

std::vector<Check> run_all(const Options& options = {});

/// Least-squares slope of log(err) against log(tau).
double loglog_slope(const std::vector<double>& tau, const std::vector<double>& err);

}  // namespace kgu::verify
