#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kgu/error.hpp"
#include "kgu/harness.hpp"
#include "kgu/kernels.hpp"
#include "kgu/model.hpp"
#include "support/oracles.hpp"

namespace kgu {
namespace {

using testing::max_abs_diff;
using testing::phase;

const Complex I(0.0, 1.0);

// int_0^t e^{ilc^2 s} ds from the antiderivative, series for small arguments.
Complex phase_integral(double l, double c, double t) {
  const double w = l * c * c;
  const Complex z(0.0, w * t);
  if (std::abs(w * t) < 1e-3) return t * (1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0);
  return (phase(l, c, t) - 1.0) / Complex(0.0, w);
}

// Scalar Psi for a constant field v.
Complex psi_scalar(double t_n, double t, Complex v, double c) {
  auto tphi1 = [&](double l) { return phase_integral(l, c, t); };
  const Complex vb = std::conj(v);
  return phase(2, c, t_n) * tphi1(2) * v * v * v + 3.0 * phase(-2, c, t_n) * tphi1(-2) * std::norm(v) * vb +
         phase(-4, c, t_n) * tphi1(-4) * vb * vb * vb;
}

// tau^{-2} int_0^tau e^{ilc^2 s} f(s) ds by quadrature.
template <class F>
Complex scaled_integral(double tau, double l, double c, F&& f) {
  const int panels = 1 + static_cast<int>(6.0 * c * c * tau);
  return testing::integrate<64>(tau, panels, [&](double s) { return phase(l, c, s) * f(s); }) / (tau * tau);
}

TEST(Psi, Examples) {
  const auto g = make_grid(1, 16);
  std::mt19937_64 rng(1);
  const auto v = testing::random_smooth(g, rng);
  EXPECT_EQ(sobolev_norm(kernel_psi(0.1, 0.0, v, 10.0), 0.0), 0.0);
  EXPECT_EQ(sobolev_norm(kernel_psi(0.1, 0.01, SpectralField(g), 10.0), 0.0), 0.0);

  // Small c^2 t: phi_1 -> 1.
  const double c = 1e-3, t = 0.5, t_n = 0.2;
  const auto vp = v.to_physical();
  ComplexVector lim(vp.size());
  for (std::size_t j = 0; j < vp.size(); ++j) {
    const Complex x = vp[j], xb = std::conj(x);
    lim[j] = t * (phase(2, c, t_n) * x * x * x + 3.0 * phase(-2, c, t_n) * std::norm(x) * xb +
                  phase(-4, c, t_n) * xb * xb * xb);
  }
  EXPECT_LE(max_abs_diff(kernel_psi(t_n, t, v, c), to_spectral(g, lim)), 1e-5);

  const Complex a(0.3, 0.8);
  const auto k = kernel_psi(0.031, 0.02, SpectralField::mode(g, 0, a), 20.0);
  EXPECT_NEAR(std::abs(k[0] - psi_scalar(0.031, 0.02, a, 20.0)), 0.0, 1e-14);
}

TEST(Vartheta, IsTheScaledIntegralOfPsi) {
  const Complex a(0.6, -0.4);
  const auto g = make_grid(1, 8);
  for (double c : {0.01, 1.0, 10.0, 100.0}) {
    const double tau = 0.01, t_n = 0.013;
    const Complex q = scaled_integral(tau, 0, c, [&](double s) { return psi_scalar(t_n, s, a, c); });
    const auto k = kernel_vartheta(t_n, tau, SpectralField::mode(g, 0, a), c);
    EXPECT_NEAR(std::abs(k[0] - q), 0.0, 1e-12) << c;
  }
  // c^2 tau -> 0 gives half of the bracket.
  const double t_n = 0.4;
  const double c = 1e-6;
  const Complex ab = std::conj(a);
  const Complex lim = 0.5 * (phase(2, c, t_n) * a * a * a + 3.0 * phase(-2, c, t_n) * std::norm(a) * ab +
                             phase(-4, c, t_n) * ab * ab * ab);
  EXPECT_NEAR(std::abs(kernel_vartheta(t_n, 1e-3, SpectralField::mode(g, 0, a), c)[0] - lim), 0.0, 1e-12);
}

TEST(Vartheta, BoundedUniformlyInC) {
  const auto g = make_grid(1, 32);
  std::mt19937_64 rng(2);
  for (int s = 0; s < 10; ++s) {
    const auto v = testing::random_smooth(g, rng);
    const double v3 = std::pow(sobolev_norm(v, 1.0), 3);
    for (double c : {1.0, 10.0, 1e2, 1e4}) {
      const double n = sobolev_norm(kernel_vartheta(0.05, 0.01, v, c), 1.0);
      ASSERT_TRUE(std::isfinite(n));
      // |phi_2| <= 1/2 on the imaginary axis; the H^1 algebra constant is below 3.
      EXPECT_LE(n, 0.5 * 5.0 * 9.0 * v3);
    }
  }
}

TEST(Omega, MatchesQuadratureOfDefinition) {
  const auto g = make_grid(1, 32);
  std::mt19937_64 rng(3);
  auto v = testing::random_smooth(g, rng);
  v *= 1.0 / sobolev_norm(v, 1.0);
  const double tau = 0.01, t_n = 0.021;
  for (double c : {1.0, 10.0}) {
    for (int l : {-4, -2, 2}) {
      const auto om = kernel_omega(t_n, tau, v, c, l);
      SpectralField q = testing::integrate<64>(tau, 1, [&](double s) {
        return phase(l, c, s) * kernel_psi(t_n, s, v, c);
      });
      q *= 1.0 / (tau * tau);
      EXPECT_LE(sobolev_norm(om - q, 1.0), 1e-10) << c << " " << l;
    }
  }
}

TEST(Omega, BarIsConjugateOfOppositeIndex) {
  const auto g = make_grid(1, 16);
  std::mt19937_64 rng(4);
  const auto v = testing::random_smooth(g, rng);
  const double tau = 0.02, t_n = 0.07, c = 7.0;
  for (int l : {-4, -2}) {
    // tau^{-2} int e^{ilc^2 s} conj(Psi(s)) ds.
    SpectralField q = testing::integrate<64>(tau, 4, [&](double s) {
      return phase(l, c, s) * kernel_psi(t_n, s, v, c).conj();
    });
    q *= 1.0 / (tau * tau);
    EXPECT_LE(max_abs_diff(kernel_omega_bar(t_n, tau, v, c, l), q), 1e-12);
  }
}

TEST(Omega, RejectsOtherIndices) {
  const auto g = make_grid(1, 8);
  for (int l : {0, 4, -3}) {
    try {
      kernel_omega(0.0, 0.1, SpectralField(g), 1.0, l);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::invalid_index);
    }
  }
  try {
    kernel_omega_bar(0.0, 0.1, SpectralField(g), 1.0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_index);
  }
}

TEST(Omega, SmoothAcrossTheSeriesThreshold) {
  const auto g = make_grid(1, 8);
  const auto v = SpectralField::mode(g, 0, Complex(0.9, 0.2));
  const double c = 1.0;
  for (int l : {-4, -2, 2}) {
    // c^2 tau |l + m| crosses 1e-2 near tau = 1e-2 / 6.
    const double lo = kernel_omega(0.0, 1e-2 / 6.0 * 0.999, v, c, l)[0].real();
    const double hi = kernel_omega(0.0, 1e-2 / 6.0 * 1.001, v, c, l)[0].real();
    EXPECT_NEAR(lo, hi, 1e-5);
  }
}

TEST(Theta, VanishesOnConstantsAndDecaysInC) {
  const auto g = make_grid(1, 32);
  for (double c : {1.0, 100.0}) {
    const auto m = make_multipliers(g, c);
    EXPECT_LE(sobolev_norm(kernel_theta(0.0, 0.01, SpectralField::mode(g, 0, 0.7), m), 0.0), 1e-16);
    EXPECT_EQ(sobolev_norm(kernel_theta(0.0, 0.01, SpectralField(g), m), 0.0), 0.0);
  }
  const auto v = SpectralField::sample(g, [](double x) { return 0.5 * std::sin(x) + 0.2 * std::cos(2.0 * x); });
  std::vector<double> cs{10.0, 100.0, 1000.0}, norms;
  for (double c : cs) norms.push_back(sobolev_norm(kernel_theta(0.0, 0.01, v, make_multipliers(g, c)), 1.0));
  const double slope = std::log(norms[2] / norms[0]) / std::log(cs[2] / cs[0]);
  EXPECT_NEAR(slope, -2.0, 0.1);
}

// I^1 for a constant field: every operator is its k = 0 value.
Complex block_scalar(double tau, double t_n, Complex a, double c) {
  const Complex ab = std::conj(a);
  const double n = std::norm(a);
  auto tphi1 = [&](double l) {
    return testing::integrate<64>(tau, 1 + static_cast<int>(4 * c * c * tau), [&](double s) {
      return phase(l, c, s);
    });
  };
  auto moment = [&](double l) { return scaled_integral(tau, l, c, [](double s) { return Complex(s); }); };
  auto omega = [&](double l) { return scaled_integral(tau, l, c, [&](double s) { return psi_scalar(t_n, s, a, c); }); };
  const Complex e2 = phase(2, c, t_n), em2 = phase(-2, c, t_n), em4 = phase(-4, c, t_n);
  const double t2 = tau * tau;
  Complex out = e2 * tphi1(2) * a * a * a + 3.0 * em2 * tphi1(-2) * n * ab + em4 * tphi1(-4) * ab * ab * ab;
  out += -t2 * (3.0 * I / 8.0) * e2 * a * a * (3.0 * moment(2) * n * a + omega(2));
  out += -t2 * (3.0 * I / 8.0) * em2 * ab * ab * (3.0 * moment(-2) * n * a + omega(-2));
  out += t2 * (6.0 * I / 8.0) * em2 * n * std::conj(3.0 * moment(2) * n * a + omega(2));
  out += t2 * (3.0 * I / 8.0) * em4 * ab * ab * std::conj(3.0 * moment(4) * n * a + omega(4));
  return out;
}

TEST(OscillatoryBlock, ConstantModeByHand) {
  const auto g = make_grid(1, 8);
  const Complex a(0.5, 0.3);
  for (double c : {0.5, 3.0, 40.0}) {
    const auto m = make_multipliers(g, c);
    for (double tau : {0.01, 0.1}) {
      const auto b = oscillatory_block(tau, 0.017, SpectralField::mode(g, 0, a), m);
      const Complex ref = block_scalar(tau, 0.017, a, c);
      EXPECT_NEAR(std::abs(b[0] - ref), 0.0, 1e-13 * std::max(1.0, std::abs(ref))) << c << " " << tau;
    }
  }
  EXPECT_EQ(sobolev_norm(oscillatory_block(0.01, 0.0, SpectralField(g), make_multipliers(g, 2.0)), 0.0), 0.0);
}

// Duhamel integral with u*(t_n + s) replaced by its first-order expansion.
SpectralField expanded_integral(double tau, double t_n, const SpectralField& u, const MultiplierSet& m) {
  const double c = m.c();
  const SpectralField g3 = cubic(u);
  const auto& grid = u.grid();
  return testing::integrate<64>(tau, 1 + static_cast<int>(tau * (6.0 * c * c + 300.0)), [&](double s) {
    const SpectralField corr = apply_symbol(m.c_inv(), Complex(3.0 * s) * g3 + kernel_psi(t_n, s, u, c));
    const auto w = (exp_A_c(s, m, u) - (I / 8.0) * corr).to_physical();
    ComplexVector f(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Complex x = w[j], xb = std::conj(x);
      f[j] = phase(2, c, t_n + s) * x * x * x + 3.0 * phase(-2, c, t_n + s) * std::norm(x) * xb +
             phase(-4, c, t_n + s) * xb * xb * xb;
    }
    return exp_A_c(tau - s, m, to_spectral(grid, f));
  });
}

TEST(OscillatoryBlock, ThirdOrderAgainstExpandedDuhamelIntegral) {
  const auto g = make_grid(1, 32);
  const double c = 10.0;
  const auto m = make_multipliers(g, c);
  const auto u = to_twisted(paper_initial_data(g, c), m).u_star;
  std::vector<std::pair<double, double>> pts;
  for (int e = 6; e <= 12; ++e) {
    const double tau = std::ldexp(1.0, -e);
    pts.emplace_back(tau, sobolev_norm(oscillatory_block(tau, 0.0, u, m) - expanded_integral(tau, 0.0, u, m), 1.0));
  }
  EXPECT_GE(fit_order(pts), 2.7);
}

TEST(Kernels, FiniteForAllSpeeds) {
  const auto g = make_grid(1, 16);
  std::mt19937_64 rng(6);
  const auto v = testing::random_smooth(g, rng);
  for (double c : {1e-3, 1.0, 1e2, 1e4, 1e6})
    for (double tau : {1e-8, 1e-3, 0.1}) {
      const auto b = kernel_bundle(0.05, tau, v, make_multipliers(g, c));
      double s = sobolev_norm(b.psi, 1.0) + sobolev_norm(b.vartheta, 1.0) + sobolev_norm(b.theta, 1.0);
      for (const auto& [l, f] : b.omega) s += sobolev_norm(f, 1.0);
      EXPECT_TRUE(std::isfinite(s)) << c << " " << tau;
      EXPECT_EQ(b.omega.size(), 3u);
    }
}

}  // namespace
}  // namespace kgu
