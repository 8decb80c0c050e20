#pragma once

#include <array>
#include <memory>

#include "kgu/spectral.hpp"

namespace kgu {

/// Per-wavenumber tables and scalar phi values for one (grid, c, tau).
///
/// Symbols: mu = 2c^2 + k^2/2 (resonant), lambda_2 = -(c^2 + c<k>_c) and
/// lambda_4 = -(3c^2 + c<k>_c) (non-resonant, for the e^{-2ic^2 t} and
/// e^{-4ic^2 t} families).
struct StepOperators {
  ComplexVector e_tau;         // e^{i tau A_c}
  ComplexVector e_half;        // e^{i tau A_c / 2}
  ComplexVector phi1_res;      // phi_1(i tau mu)
  ComplexVector mom_res;       // phi_moment(i tau mu)
  ComplexVector phi1_nr2;      // phi_1(i tau lambda_2)
  ComplexVector mom_nr2;
  ComplexVector phi1_nr4;      // phi_1(i tau lambda_4)
  ComplexVector mom_nr4;
  ComplexVector lie;           // e^{i tau k^2 / 2}
  ComplexVector strang_half;   // e^{i tau k^2 / 4}
  RealVector c_inv;            // c / <k>_c
  RealVector cm1;              // c / <k>_c - 1
  RealVector a_c;
  RealVector res_shift;        // -k^2/2 - A_c

  // phi_j(l i c^2 tau) and phi_moment(l i c^2 tau).
  Complex phi1_p2, phi1_m2, phi1_m4;
  Complex phi2_p2, phi2_m2, phi2_m4;
  Complex mom_p2, mom_m2, mom_p4;

  /// (phi_1((l+m) i c^2 tau) - phi_1(l i c^2 tau)) / (m i c^2 tau)
  /// for l in {-4, -2, 2, 4} and m in {2, -2, -4}.
  Complex omega_quotient(int l, int m) const;

  std::array<std::array<Complex, 3>, 4> quotients{};
};

/// Everything a step function needs besides the state: grid, multipliers,
/// tau, the diagnostic norm order r and the product grid.
class StepContext {
 public:
  /// Throws Errc::invalid_parameter unless tau > 0 and r >= 0.
  StepContext(const MultiplierSet& m, double tau, double r = 1.0, Dealias dealias = Dealias::off);

  const SpectralGrid& grid() const noexcept { return m_->grid(); }
  const MultiplierSet& multipliers() const noexcept { return *m_; }
  double c() const noexcept { return m_->c(); }
  double tau() const noexcept { return tau_; }
  double r() const noexcept { return r_; }
  Dealias dealias() const noexcept { return dealias_; }
  std::size_t physical_size() const noexcept { return kgu::physical_size(grid(), dealias_); }
  const StepOperators& ops() const noexcept { return *ops_; }

 private:
  std::shared_ptr<const MultiplierSet> m_;
  std::shared_ptr<const StepOperators> ops_;
  double tau_;
  double r_;
  Dealias dealias_;
};

}  // namespace kgu
