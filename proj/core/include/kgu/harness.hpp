#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kgu/evolve.hpp"
#include "kgu/model.hpp"

namespace kgu {

/// z(0) = cos(3x)^2 sin(2x) / (2(2 - cos x)),
/// z_t(0) = c^2 sin(x) cos(2x) / (2(2 - cos x)).
KgState paper_initial_data(const SpectralGrid& grid, double c);

struct SweepConfig {
  std::vector<SchemeId> schemes;
  std::vector<double> c_list;
  /// tau = T * 2^{-m} for every m listed.
  std::vector<int> tau_exponents;
  double T = 0.1;
  int K = 256;
  double r = 1.0;
  Dealias dealias = Dealias::off;
  ReferenceOptions reference;
  /// Measure the error on (u*, v*) instead of the reconstructed z.
  bool twisted_error = false;
  /// When false every wall time is reported as 0, which makes output
  /// byte-reproducible.
  bool record_timing = true;
  /// Worker threads; 0 means hardware concurrency capped by KG_THREADS.
  unsigned threads = 0;
};

/// Throws Errc::invalid_parameter for T <= 0, an empty tau list,
/// non-positive c or K < 2.
void validate(const SweepConfig& cfg);

struct ErrorRow {
  SchemeId scheme = SchemeId::UEI1;
  double c = 1.0;
  double tau = 0.0;
  /// NaN marks a failed cell.
  double err = 0.0;
  double wall_time = 0.0;

  friend bool operator==(const ErrorRow& a, const ErrorRow& b);
};

using OrderKey = std::pair<SchemeId, double>;

struct ErrorTable {
  std::vector<ErrorRow> rows;
  /// Least-squares slope per (scheme, c); NaN when too few usable cells.
  std::map<OrderKey, double> fitted_orders;
  /// Reference self-convergence per c; NaN when the reference failed.
  std::map<double, double> certificates;

  friend bool operator==(const ErrorTable& a, const ErrorTable& b);
};

/// Runs every (scheme, c, tau) cell against one certified reference per c.
/// Cells whose reference fails are kept with err = NaN; the sweep goes on.
ErrorTable run_sweep(const SweepConfig& cfg);

/// Least-squares slope of log2(err) against log2(tau). Throws
/// Errc::insufficient_data for fewer than three points.
double fit_order(const std::vector<std::pair<double, double>>& points);

/// Slope together with its standard error.
struct OrderFit {
  double slope = 0.0;
  double stderr_slope = 0.0;
};
OrderFit fit_order_with_error(const std::vector<std::pair<double, double>>& points);

/// Cells of (scheme, c) usable for fitting: finite err at least
/// 10x the reference certificate.
std::vector<std::pair<double, double>> fit_points(const ErrorTable& table, SchemeId scheme,
                                                  double c);

/// Geometric mean of err / tau^p over the usable cells of (scheme, c).
double error_constant(const ErrorTable& table, SchemeId scheme, double c, double p);

}  // namespace kgu
