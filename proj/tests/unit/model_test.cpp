#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kgu/error.hpp"
#include "kgu/model.hpp"
#include "support/oracles.hpp"

namespace kgu {
namespace {

using testing::max_abs_diff;

KgState random_real_state(const SpectralGrid& g, double c, std::mt19937_64& rng) {
  return {testing::random_real(g, rng), c * c * testing::random_real(g, rng), 0.0};
}

TEST(FirstOrder, StaticRealDataGivesEqualComponents) {
  const auto g = make_grid(1, 16);
  const auto m = make_multipliers(g, 2.0);
  std::mt19937_64 rng(1);
  const KgState s{testing::random_real(g, rng), SpectralField(g), 0.0};
  const auto fo = to_first_order(s, m);
  EXPECT_LE(max_abs_diff(fo.u, s.z), 1e-15);
  EXPECT_LE(max_abs_diff(fo.v, s.z), 1e-15);

  const auto zero = to_first_order({SpectralField(g), SpectralField(g), 0.0}, m);
  EXPECT_EQ(sobolev_norm(zero.u, 0.0) + sobolev_norm(zero.v, 0.0), 0.0);
}

TEST(FirstOrder, RoundTripsRandomStates) {
  const auto g = make_grid(1, 32);
  std::mt19937_64 rng(2);
  for (double c : {1.0, 10.0, 1e4}) {
    const auto m = make_multipliers(g, c);
    for (int s = 0; s < 10; ++s) {
      const KgState st = random_real_state(g, c, rng);
      const auto fo = to_first_order(st, m);
      const KgState back = from_first_order(fo.u, fo.v, m);
      EXPECT_LE(max_abs_diff(back.z, st.z), 1e-12);
      EXPECT_LE(max_abs_diff(back.zt, st.zt), 1e-12 * c * c);
      // Real data gives u = v.
      EXPECT_LE(max_abs_diff(fo.u, fo.v), 1e-12);
    }
  }
}

TEST(FirstOrder, SingleModeByHand) {
  const auto g = make_grid(1, 8);
  const double c = 3.0;
  const auto m = make_multipliers(g, c);
  const auto s = from_first_order(SpectralField::mode(g, 1), SpectralField(g), m);
  EXPECT_NEAR(std::abs(s.z.at_wavenumber(1) - 0.5), 0.0, 1e-15);
  const Complex zt = Complex(0.0, 0.5) * c * std::sqrt(c * c + 1.0);
  EXPECT_NEAR(std::abs(s.zt.at_wavenumber(1) - zt), 0.0, 1e-13);
  EXPECT_NEAR(sobolev_norm(s.zt, 0.0), std::abs(zt), 1e-13);
}

TEST(FirstOrder, GridMismatchIsAShapeError) {
  const auto m = make_multipliers(make_grid(1, 8), 1.0);
  try {
    from_first_order(SpectralField(make_grid(1, 8)), SpectralField(make_grid(1, 16)), m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::shape_mismatch);
  }
}

TEST(Twist, IdentityAtZeroAndInvertible) {
  const auto g = make_grid(1, 16);
  std::mt19937_64 rng(3);
  const auto u = testing::random_smooth(g, rng);
  const auto v = testing::random_smooth(g, rng);
  const auto p0 = twist(u, v, 0.0, 5.0);
  EXPECT_EQ(max_abs_diff(p0.u_star, u), 0.0);
  for (double t : {0.013, 0.1}) {
    const auto p = twist(u, v, t, 1e4);
    for (std::size_t j = 0; j < u.size(); ++j) EXPECT_NEAR(std::abs(p.u_star[j]), std::abs(u[j]), 1e-15);
    const auto back = untwist(p);
    EXPECT_LE(max_abs_diff(back.u, u), 1e-15);
    EXPECT_LE(max_abs_diff(back.v, v), 1e-15);
  }
}

TEST(Reconstruct, MatchesDefinitions) {
  const auto g = make_grid(1, 16);
  std::mt19937_64 rng(4);
  for (double c : {1.0, 50.0, 1e4}) {
    const auto m = make_multipliers(g, c);
    for (double t : {0.0, 0.037}) {
      KgState s = random_real_state(g, c, rng);
      s.t = t;
      const auto p = to_twisted(s, m);
      EXPECT_LE(max_abs_diff(reconstruct_z(p), s.z), 1e-12);
      EXPECT_LE(max_abs_diff(p.u_star, p.v_star), 1e-12);
      const auto back = to_state(p, m);
      EXPECT_LE(max_abs_diff(back.zt, s.zt), 1e-12 * c * c);
    }
  }
  const double c = 2.0, t = 0.3;
  const Complex a(0.4, -0.2);
  const TwistedPair p{SpectralField::mode(g, 0, a), SpectralField(g), t, c};
  EXPECT_NEAR(std::abs(reconstruct_z(p)[0] - 0.5 * std::polar(1.0, c * c * t) * a), 0.0, 1e-15);
}

TEST(Cubic, Examples) {
  const auto g = make_grid(1, 8);
  EXPECT_EQ(sobolev_norm(cubic(SpectralField(g)), 0.0), 0.0);
  EXPECT_NEAR(std::abs(cubic(SpectralField::mode(g, 0, 2.0))[0] - 8.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(cubic(SpectralField::mode(g, 0, {1.0, 1.0}))[0] - Complex(2.0, 2.0)), 0.0, 1e-14);
  // e^{ix}: |.|^2 = 1, so the cube is e^{ix} again.
  const auto e1 = SpectralField::mode(g, 1);
  EXPECT_LE(max_abs_diff(cubic(e1), e1), 1e-15);
  EXPECT_LE(max_abs_diff(cubic(e1, Dealias::three_halves), e1), 1e-15);
}

TEST(Energy, ConstantByHand) {
  const auto g = make_grid(1, 8);
  const auto m = make_multipliers(g, 1.0);
  EXPECT_EQ(energy({SpectralField(g), SpectralField(g), 0.0}, m), 0.0);
  const double a = 0.7;
  const double e = energy({SpectralField::mode(g, 0, a), SpectralField(g), 0.0}, m);
  EXPECT_NEAR(e, 2.0 * std::numbers::pi * (0.5 * a * a - 0.25 * a * a * a * a), 1e-14);
}

TEST(Energy, QuadraticPartsByHand) {
  // z = cos(2x), zt = c^2 sin(x).
  const auto g = make_grid(1, 16);
  const double c = 3.0;
  const auto m = make_multipliers(g, c);
  const auto z = SpectralField::sample(g, [](double x) { return std::cos(2.0 * x); });
  const auto zt = SpectralField::sample(g, [&](double x) { return c * c * std::sin(x); });
  const double pi = std::numbers::pi;
  const double expected = 0.5 * c * c * pi + 0.5 * 4.0 * pi + 0.5 * c * c * pi - 0.25 * 0.75 * pi;
  EXPECT_NEAR(energy({z, zt, 0.0}, m), expected, 1e-12);
}

TEST(Energy, RejectsComplexData) {
  const auto g = make_grid(1, 8);
  const auto m = make_multipliers(g, 1.0);
  try {
    energy({SpectralField::mode(g, 1), SpectralField(g), 0.0}, m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::domain_error);
  }
}

}  // namespace
}  // namespace kgu
