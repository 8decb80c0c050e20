#include "kgu/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <tuple>

#include "kgu/error.hpp"

namespace kgu {
namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

unsigned worker_count(const SweepConfig& cfg, std::size_t jobs) {
  unsigned n = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("KG_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(jobs)));
}

struct CResult {
  std::vector<ErrorRow> rows;
  double certificate = nan;
};

double distance(const SweepConfig& cfg, const TwistedPair& a, const TwistedPair& b) {
  if (cfg.twisted_error) {
    const double du = sobolev_norm(a.u_star - b.u_star, cfg.r);
    const double dv = sobolev_norm(a.v_star - b.v_star, cfg.r);
    return std::hypot(du, dv);
  }
  return sobolev_norm(reconstruct_z(a) - reconstruct_z(b), cfg.r);
}

CResult run_c(const SweepConfig& cfg, double c) {
  using clock = std::chrono::steady_clock;
  CResult out;
  const SpectralGrid grid = make_grid(1, cfg.K);
  const MultiplierSet m = make_multipliers(grid, c);
  const KgState s0 = paper_initial_data(grid, c);
  ReferenceOptions ropt = cfg.reference;
  ropt.r = cfg.r;
  ropt.dealias = cfg.dealias;

  Reference ref;
  bool ok = true;
  try {
    ref = reference_solution(s0, m, cfg.T, ropt);
    out.certificate = ref.certificate;
  } catch (const Error& e) {
    if (e.code() != Errc::reference_unreliable) throw;
    ok = false;
  }

  const TwistedPair start = to_twisted(s0, m);
  for (SchemeId scheme : cfg.schemes) {
    for (int e : cfg.tau_exponents) {
      ErrorRow row{scheme, c, std::ldexp(cfg.T, -e), nan, 0.0};
      if (ok) {
        const StepContext ctx(m, row.tau, cfg.r, cfg.dealias);
        const auto t0 = clock::now();
        const TwistedPair end = evolve(scheme, start, cfg.T, ctx);
        const auto t1 = clock::now();
        const double err = distance(cfg, end, ref.pair);
        row.err = std::isfinite(err) ? err : nan;
        if (cfg.record_timing) row.wall_time = std::chrono::duration<double>(t1 - t0).count();
      }
      out.rows.push_back(row);
    }
  }
  return out;
}

}  // namespace

KgState paper_initial_data(const SpectralGrid& grid, double c) {
  if (grid.dimension() != 1)
    throw Error(Errc::unsupported_dimension, "the initial data is defined for d = 1");
  const double c2 = c * c;
  SpectralField z = SpectralField::sample(grid, [](double x) {
    const double a = std::cos(3.0 * x);
    return 0.5 * a * a * std::sin(2.0 * x) / (2.0 - std::cos(x));
  });
  SpectralField zt = SpectralField::sample(grid, [c2](double x) {
    return c2 * 0.5 * std::sin(x) * std::cos(2.0 * x) / (2.0 - std::cos(x));
  });
  return {std::move(z), std::move(zt), 0.0};
}

void validate(const SweepConfig& cfg) {
  if (!(cfg.T > 0.0) || !std::isfinite(cfg.T))
    throw Error(Errc::invalid_parameter, "T must be positive");
  if (cfg.tau_exponents.empty()) throw Error(Errc::invalid_parameter, "tau list is empty");
  for (double c : cfg.c_list)
    if (!(c > 0.0) || !std::isfinite(c))
      throw Error(Errc::invalid_parameter, "every c must be positive");
  for (int e : cfg.tau_exponents)
    if (e < 0) throw Error(Errc::invalid_parameter, "tau exponents must be nonnegative");
  if (cfg.K < 2) throw Error(Errc::invalid_parameter, "K must be at least 2");
  if (!(cfg.r >= 0.0)) throw Error(Errc::invalid_parameter, "r must be nonnegative");
}

bool operator==(const ErrorRow& a, const ErrorRow& b) {
  return a.scheme == b.scheme && same(a.c, b.c) && same(a.tau, b.tau) && same(a.err, b.err) &&
         same(a.wall_time, b.wall_time);
}

bool operator==(const ErrorTable& a, const ErrorTable& b) {
  auto eq_map = [](const auto& x, const auto& y) {
    return x.size() == y.size() &&
           std::equal(x.begin(), x.end(), y.begin(), [](const auto& p, const auto& q) {
             return p.first == q.first && same(p.second, q.second);
           });
  };
  return a.rows == b.rows && eq_map(a.fitted_orders, b.fitted_orders) &&
         eq_map(a.certificates, b.certificates);
}

ErrorTable run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  ErrorTable table;
  if (cfg.schemes.empty() || cfg.c_list.empty()) return table;

  std::vector<double> cs = cfg.c_list;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

  std::vector<CResult> results(cs.size());
  std::vector<std::exception_ptr> errors(cs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cs.size(); i = next++) {
      try {
        results[i] = run_c(cfg, cs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = worker_count(cfg, cs.size());
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 0; i < cs.size(); ++i) {
    table.certificates[cs[i]] = results[i].certificate;
    table.rows.insert(table.rows.end(), results[i].rows.begin(), results[i].rows.end());
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const ErrorRow& a, const ErrorRow& b) {
    return std::tie(a.scheme, a.c, a.tau) < std::tie(b.scheme, b.c, b.tau);
  });
  table.rows.erase(std::unique(table.rows.begin(), table.rows.end(),
                               [](const ErrorRow& a, const ErrorRow& b) {
                                 return a.scheme == b.scheme && a.c == b.c && a.tau == b.tau;
                               }),
                   table.rows.end());
  for (const auto& row : table.rows) {
    const OrderKey key{row.scheme, row.c};
    if (table.fitted_orders.contains(key)) continue;
    const auto pts = fit_points(table, row.scheme, row.c);
    table.fitted_orders[key] = pts.size() >= 3 ? fit_order(pts) : nan;
  }
  return table;
}

OrderFit fit_order_with_error(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw Error(Errc::insufficient_data, "order fit needs at least three points, got " +
                                             std::to_string(points.size()));
  const double n = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [tau, err] : points) {
    if (!(tau > 0.0) || !(err > 0.0))
      throw Error(Errc::invalid_parameter, "order fit needs positive tau and err");
    sx += std::log2(tau);
    sy += std::log2(err);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [tau, err] : points) {
    const double dx = std::log2(tau) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log2(err) - my);
  }
  if (!(sxx > 0.0)) throw Error(Errc::insufficient_data, "order fit needs distinct step sizes");
  OrderFit fit;
  fit.slope = sxy / sxx;
  double rss = 0.0;
  for (const auto& [tau, err] : points) {
    const double res = std::log2(err) - my - fit.slope * (std::log2(tau) - mx);
    rss += res * res;
  }
  fit.stderr_slope = std::sqrt(rss / (n - 2.0) / sxx);
  return fit;
}

double fit_order(const std::vector<std::pair<double, double>>& points) {
  return fit_order_with_error(points).slope;
}

std::vector<std::pair<double, double>> fit_points(const ErrorTable& table, SchemeId scheme,
                                                  double c) {
  double floor = 0.0;
  if (auto it = table.certificates.find(c); it != table.certificates.end() &&
                                            std::isfinite(it->second))
    floor = 10.0 * it->second;
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : table.rows)
    if (row.scheme == scheme && row.c == c && std::isfinite(row.err) && row.err > 0.0 &&
        row.err >= floor)
      pts.emplace_back(row.tau, row.err);
  return pts;
}

double error_constant(const ErrorTable& table, SchemeId scheme, double c, double p) {
  const auto pts = fit_points(table, scheme, c);
  if (pts.empty()) return nan;
  double sum = 0.0;
  for (const auto& [tau, err] : pts) sum += std::log(err) - p * std::log(tau);
  return std::exp(sum / static_cast<double>(pts.size()));
}

}  // namespace kgu
