#include "kgu/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kgu/error.hpp"
#include "kgu/fft.hpp"

namespace kgu {

std::vector<int> SpectralGrid::wavenumbers() const {
  std::vector<int> ks(size());
  for (std::size_t j = 0; j < ks.size(); ++j) ks[j] = wavenumber(j);
  return ks;
}

double SpectralGrid::spacing() const noexcept {
  return 2.0 * std::numbers::pi / static_cast<double>(size());
}

SpectralGrid make_grid(int dimension, int modes) {
  if (dimension != 1)
    throw Error(Errc::unsupported_dimension,
                "only d = 1 is implemented, got d = " + std::to_string(dimension));
  if (modes < 2) throw Error(Errc::invalid_size, "need K >= 2, got K = " + std::to_string(modes));
  return SpectralGrid(dimension, modes);
}

SpectralField::SpectralField(const SpectralGrid& grid) : grid_(grid), coeffs_(grid.size()) {}

SpectralField::SpectralField(const SpectralGrid& grid, ComplexVector coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != grid_.size())
    throw Error(Errc::shape_mismatch, "coefficient count " + std::to_string(coeffs_.size()) +
                                          " does not match grid size " +
                                          std::to_string(grid_.size()));
}

SpectralField SpectralField::from_physical(const SpectralGrid& grid,
                                           std::span<const Complex> values) {
  return to_spectral(grid, values);
}

SpectralField SpectralField::mode(const SpectralGrid& grid, int k, Complex amplitude) {
  if (k < -grid.modes() || k >= grid.modes())
    throw Error(Errc::invalid_index, "wavenumber " + std::to_string(k) + " outside the grid");
  SpectralField f(grid);
  f[grid.index_of(k)] = amplitude;
  return f;
}

ComplexVector SpectralField::to_physical(std::size_t points) const {
  const std::size_t n = size();
  if (points == 0) points = n;
  if (points < n)
    throw Error(Errc::shape_mismatch, "cannot evaluate on a grid coarser than the field");
  ComplexVector out(points);
  if (points == n) {
    fft::backward(coeffs_, out);
    return out;
  }
  ComplexVector padded(points);
  for (std::size_t j = 0; j < n; ++j) {
    const int k = grid_.wavenumber(j);
    padded[k >= 0 ? static_cast<std::size_t>(k) : points - static_cast<std::size_t>(-k)] =
        coeffs_[j];
  }
  fft::backward(padded, out);
  return out;
}

SpectralField SpectralField::conj() const {
  const std::size_t n = size();
  SpectralField out(grid_);
  out.coeffs_[0] = std::conj(coeffs_[0]);
  for (std::size_t j = 1; j < n; ++j) out.coeffs_[j] = std::conj(coeffs_[n - j]);
  return out;
}

void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid()) || a.size() != b.size())
    throw Error(Errc::shape_mismatch, "fields live on different grids");
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(*this, other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(*this, other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

SpectralField& SpectralField::operator*=(Complex scalar) noexcept {
  for (auto& x : coeffs_) x *= scalar;
  return *this;
}

std::size_t physical_size(const SpectralGrid& grid, Dealias dealias) noexcept {
  return dealias == Dealias::off ? grid.size() : 3 * static_cast<std::size_t>(grid.modes());
}

SpectralField to_spectral(const SpectralGrid& grid, std::span<const Complex> values) {
  const std::size_t n = grid.size();
  const std::size_t points = values.size();
  if (points < n)
    throw Error(Errc::shape_mismatch, "expected at least " + std::to_string(n) +
                                          " nodal values, got " + std::to_string(points));
  ComplexVector hat(points);
  fft::forward(values, hat);
  if (points == n) return SpectralField(grid, std::move(hat));
  ComplexVector coeffs(n);
  for (std::size_t j = 0; j < n; ++j) {
    const int k = grid.wavenumber(j);
    coeffs[j] = hat[k >= 0 ? static_cast<std::size_t>(k) : points - static_cast<std::size_t>(-k)];
  }
  return SpectralField(grid, std::move(coeffs));
}

MultiplierSet make_multipliers(const SpectralGrid& grid, double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw Error(Errc::invalid_parameter, "speed of light must be positive and finite");
  MultiplierSet m;
  m.grid_ = grid;
  m.c_ = c;
  const std::size_t n = grid.size();
  m.bracket_.resize(n);
  m.a_c_.resize(n);
  m.c_inv_.resize(n);
  m.laplace_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double k = grid.wavenumber(j);
    const double k2 = k * k;
    const double b = std::hypot(c, k);
    m.bracket_[j] = b;
    m.a_c_[j] = c * k2 / (b + c);
    m.c_inv_[j] = c / b;
    m.laplace_[j] = -k2;
  }
  return m;
}

namespace {

template <class T>
SpectralField apply(std::span<const T> symbol, const SpectralField& f) {
  if (symbol.size() != f.size())
    throw Error(Errc::shape_mismatch, "symbol length " + std::to_string(symbol.size()) +
                                          " does not match field size " +
                                          std::to_string(f.size()));
  SpectralField out = f;
  auto c = out.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) c[j] *= symbol[j];
  return out;
}

}  // namespace

SpectralField apply_symbol(std::span<const double> symbol, const SpectralField& f) {
  return apply(symbol, f);
}

SpectralField apply_symbol(std::span<const Complex> symbol, const SpectralField& f) {
  return apply(symbol, f);
}

SpectralField exp_A_c(double t, const MultiplierSet& m, const SpectralField& f) {
  if (!(m.grid() == f.grid())) throw Error(Errc::shape_mismatch, "multipliers built for another grid");
  SpectralField out = f;
  auto c = out.coeffs();
  const auto a = m.a_c();
  for (std::size_t j = 0; j < c.size(); ++j) c[j] *= std::polar(1.0, t * a[j]);
  return out;
}

double sobolev_norm(const SpectralField& f, double r) {
  if (!(r >= 0.0)) throw Error(Errc::invalid_parameter, "Sobolev order must be nonnegative");
  const auto& g = f.grid();
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double k = g.wavenumber(j);
    const double w = r == 0.0 ? 1.0 : std::pow(1.0 + k * k, r);
    sum += w * std::norm(f[j]);
  }
  return std::sqrt(sum);
}

double max_imag_physical(const SpectralField& f) {
  double worst = 0.0;
  for (const auto& x : f.to_physical()) worst = std::max(worst, std::abs(x.imag()));
  return worst;
}

}  // namespace kgu
