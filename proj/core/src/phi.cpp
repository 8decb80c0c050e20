#include "kgu/phi.hpp"

#include <cmath>
#include <numbers>

#include "kgu/error.hpp"

namespace kgu {
namespace {

constexpr int taylor_terms = 10;

// e^z - 1 without cancellation for small |z|.
Complex expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

// sum_{m >= 0} z^m / (m + j)!
Complex taylor(int j, Complex z) {
  double fact = 1.0;
  for (int i = 2; i <= j; ++i) fact *= i;
  Complex term = 1.0 / fact;
  Complex sum = term;
  for (int m = 1; m < taylor_terms; ++m) {
    term *= z / static_cast<double>(m + j);
    sum += term;
  }
  return sum;
}

}  // namespace

Complex phi(int j, Complex z) {
  if (j < 0 || j > 2) throw Error(Errc::invalid_index, "phi index must be 0, 1 or 2");
  if (j == 0) return std::exp(z);
  if (std::abs(z) < phi_taylor_threshold) return taylor(j, z);
  const Complex e = expm1(z);
  if (j == 1) return e / z;
  return (e - z) / (z * z);
}

Complex phi_moment(Complex z) { return phi(1, z) - phi(2, z); }

SpectralField phi_of_operator(int j, std::span<const Complex> z_symbol, const SpectralField& f) {
  if (z_symbol.size() != f.size())
    throw Error(Errc::shape_mismatch, "symbol length does not match field size");
  SpectralField out = f;
  auto c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= phi(j, z_symbol[k]);
  return out;
}

Complex fast_phase(double l, double c, double t) {
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double arg = static_cast<long double>(l) * c * c * t;
  const auto reduced = static_cast<double>(std::fmod(arg, two_pi));
  return std::polar(1.0, reduced);
}

Complex phi1_quotient(int l, int m, double x) {
  if (m == 0) throw Error(Errc::invalid_index, "difference step must be nonzero");
  const double a = l + m;
  if (std::abs(x) * std::max(std::abs(a), std::abs(static_cast<double>(l))) >= phi_taylor_threshold)
    return (phi(1, Complex(0.0, a * x)) - phi(1, Complex(0.0, l * x))) / Complex(0.0, m * x);
  // sum_{k >= 1} (ix)^{k-1} ((l+m)^k - l^k) / (m (k+1)!)
  const Complex ix(0.0, x);
  Complex power = 1.0;
  double ak = 1.0, lk = 1.0, fact = 1.0;
  Complex sum = 0.0;
  for (int k = 1; k <= 20; ++k) {
    ak *= a;
    lk *= l;
    fact *= k + 1;
    sum += power * ((ak - lk) / (m * fact));
    power *= ix;
  }
  return sum;
}

}  // namespace kgu
