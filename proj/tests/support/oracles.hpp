#pragma once

// Test-side reference computations, independent of the library internals.

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "kgu/spectral.hpp"

namespace kgu::testing {

using LComplex = std::complex<long double>;

// Full Gauss-Legendre rule on [-1, 1] from Boost's half-rule tables.
template <unsigned N>
std::vector<std::pair<double, double>> boost_gauss() {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& x = G::abscissa();
  const auto& w = G::weights();
  std::vector<std::pair<double, double>> rule;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      rule.emplace_back(0.0, w[i]);
      continue;
    }
    rule.emplace_back(x[i], w[i]);
    rule.emplace_back(-x[i], w[i]);
  }
  return rule;
}

// int_0^tau f(s) ds with `panels` equal panels of the N-point rule.
template <unsigned N, class F>
auto integrate(double tau, int panels, F&& f) {
  static const auto rule = boost_gauss<N>();
  const double h = tau / panels;
  using R = decltype(f(0.0));
  R acc{};
  bool first = true;
  for (int p = 0; p < panels; ++p)
    for (const auto& [x, w] : rule) {
      const double s = (p + 0.5 * (x + 1.0)) * h;
      R term = f(s);
      term *= 0.5 * h * w;
      if (first) {
        acc = term;
        first = false;
      } else {
        acc += term;
      }
    }
  return acc;
}

// phi_j by a 40-term Taylor series in long double.
inline LComplex phi_taylor(int j, LComplex z) {
  LComplex sum = 0, term = 1;
  long double fact = 1;
  for (int i = 2; i <= j; ++i) fact *= i;
  term = 1.0L / fact;
  for (int n = 0; n < 40; ++n) {
    sum += term;
    term *= z / static_cast<long double>(n + j + 1);
  }
  return sum;
}

// phi_j from the closed forms in long double.
inline LComplex phi_direct(int j, LComplex z) {
  const LComplex e = std::exp(z);
  if (j == 0) return e;
  if (j == 1) return (e - 1.0L) / z;
  return (e - 1.0L - z) / (z * z);
}

inline std::complex<double> to_double(LComplex z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// e^{i theta} with theta reduced in long double.
inline std::complex<double> phase(double l, double c, double t) {
  const long double two_pi = 6.283185307179586476925286766559L;
  const long double a = std::fmod(static_cast<long double>(l) * c * c * t, two_pi);
  return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

inline SpectralField random_smooth(const SpectralGrid& grid, std::mt19937_64& rng,
                                   double decay = 3.0) {
  std::normal_distribution<double> n;
  SpectralField f(grid);
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double k = grid.wavenumber(j);
    f[j] = std::complex<double>(n(rng), n(rng)) * std::pow(1.0 + k * k, -0.5 * decay);
  }
  return f;
}

// Coefficients of a real function: c_{-k} = conj(c_k), c_{-K} real.
inline SpectralField random_real(const SpectralGrid& grid, std::mt19937_64& rng,
                                 double decay = 3.0) {
  SpectralField f = random_smooth(grid, rng, decay);
  return 0.5 * (f + f.conj());
}

// ||f||_r computed directly from the definition.
inline double hr_norm(const SpectralField& f, double r) {
  long double s = 0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double k = f.grid().wavenumber(j);
    s += std::pow(1.0L + k * k, static_cast<long double>(r)) * std::norm(f[j]);
  }
  return static_cast<double>(std::sqrt(s));
}

inline double max_abs_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace kgu::testing
