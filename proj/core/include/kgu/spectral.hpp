#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace kgu {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

/// Periodic Fourier grid on the torus [0, 2*pi)^d.
///
/// A grid with `modes() == K` carries 2K nodes x_j = 2*pi*j/(2K) and the
/// wavenumbers k in {-K, ..., K-1}. Coefficients are stored in standard FFT
/// order: index j holds k = j for j < K and k = j - 2K for j >= K, so index K
/// is the unpaired mode -K.
///
/// Only d = 1 is implemented.
class SpectralGrid {
 public:
  SpectralGrid() = default;

  int dimension() const noexcept { return dimension_; }
  int modes() const noexcept { return modes_; }
  std::size_t size() const noexcept { return 2 * static_cast<std::size_t>(modes_); }

  int wavenumber(std::size_t index) const noexcept {
    const auto k = static_cast<int>(index);
    return k < modes_ ? k : k - 2 * modes_;
  }
  std::size_t index_of(int k) const noexcept {
    return static_cast<std::size_t>(k >= 0 ? k : k + 2 * modes_);
  }
  std::vector<int> wavenumbers() const;

  double spacing() const noexcept;
  double node(std::size_t j) const noexcept { return static_cast<double>(j) * spacing(); }

  friend bool operator==(const SpectralGrid&, const SpectralGrid&) = default;

 private:
  friend SpectralGrid make_grid(int dimension, int modes);
  SpectralGrid(int dimension, int modes) : dimension_(dimension), modes_(modes) {}

  int dimension_ = 1;
  int modes_ = 0;
};

/// Throws Errc::unsupported_dimension for d != 1 and Errc::invalid_size for K < 2.
SpectralGrid make_grid(int dimension, int modes);

/// Fourier coefficients of a periodic function, normalised so that
/// u(x) = sum_k c_k e^{ikx}; the constant function 1 has c_0 = 1.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(const SpectralGrid& grid);
  SpectralField(const SpectralGrid& grid, ComplexVector coeffs);

  /// Samples `f` at the grid nodes and transforms.
  template <class F>
  static SpectralField sample(const SpectralGrid& grid, F&& f) {
    ComplexVector values(grid.size());
    for (std::size_t j = 0; j < values.size(); ++j) values[j] = Complex(f(grid.node(j)));
    return from_physical(grid, values);
  }
  static SpectralField from_physical(const SpectralGrid& grid, std::span<const Complex> values);
  static SpectralField mode(const SpectralGrid& grid, int k, Complex amplitude = 1.0);

  const SpectralGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  std::span<Complex> coeffs() noexcept { return coeffs_; }

  Complex operator[](std::size_t index) const noexcept { return coeffs_[index]; }
  Complex& operator[](std::size_t index) noexcept { return coeffs_[index]; }
  Complex at_wavenumber(int k) const { return coeffs_[grid_.index_of(k)]; }

  /// Nodal values on the grid; `points > size()` zero-pads to a finer grid.
  ComplexVector to_physical(std::size_t points = 0) const;

  /// Complex conjugate of the underlying function: c_k -> conj(c_{-k}).
  SpectralField conj() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(Complex scalar) noexcept;

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(Complex s, SpectralField a) { return a *= s; }
  friend SpectralField operator*(SpectralField a, Complex s) { return a *= s; }

 private:
  SpectralGrid grid_;
  ComplexVector coeffs_;
};

/// Grid used for pointwise products: the field's own nodes, or 3/2 as many
/// nodes so that cubic products of the retained modes are not aliased.
enum class Dealias { off, three_halves };

std::size_t physical_size(const SpectralGrid& grid, Dealias dealias) noexcept;

/// Inverse of SpectralField::to_physical; `values.size()` may exceed the grid
/// size, in which case the modes outside {-K, ..., K-1} are dropped.
SpectralField to_spectral(const SpectralGrid& grid, std::span<const Complex> values);

/// Throws Errc::shape_mismatch unless both fields live on the same grid.
void require_same_grid(const SpectralField& a, const SpectralField& b);

/// Diagonal Fourier symbols of the operators used by the Klein-Gordon
/// reformulation, for a fixed grid and speed of light c.
class MultiplierSet {
 public:
  const SpectralGrid& grid() const noexcept { return grid_; }
  double c() const noexcept { return c_; }

  /// sqrt(c^2 + k^2), the symbol of <nabla>_c.
  std::span<const double> bracket() const noexcept { return bracket_; }
  /// c*sqrt(c^2 + k^2) - c^2, the symbol of A_c, in cancellation-free form.
  std::span<const double> a_c() const noexcept { return a_c_; }
  /// c / sqrt(c^2 + k^2), the symbol of c <nabla>_c^{-1}.
  std::span<const double> c_inv() const noexcept { return c_inv_; }
  /// -k^2.
  std::span<const double> laplace() const noexcept { return laplace_; }

 private:
  friend MultiplierSet make_multipliers(const SpectralGrid& grid, double c);

  SpectralGrid grid_;
  double c_ = 1.0;
  RealVector bracket_;
  RealVector a_c_;
  RealVector c_inv_;
  RealVector laplace_;
};

/// Throws Errc::invalid_parameter for c <= 0 (or non-finite c).
MultiplierSet make_multipliers(const SpectralGrid& grid, double c);

SpectralField apply_symbol(std::span<const double> symbol, const SpectralField& f);
SpectralField apply_symbol(std::span<const Complex> symbol, const SpectralField& f);

/// e^{i t A_c} f.
SpectralField exp_A_c(double t, const MultiplierSet& m, const SpectralField& f);

/// ||f||_r = ( sum_k (1 + k^2)^r |c_k|^2 )^{1/2}.
double sobolev_norm(const SpectralField& f, double r);

/// Largest |Im| of the nodal values, for realness checks.
double max_imag_physical(const SpectralField& f);

}  // namespace kgu
