#include "kgu/step_context.hpp"

#include <cmath>

#include "kgu/error.hpp"
#include "kgu/phi.hpp"

namespace kgu {
namespace {

int l_slot(int l) {
  switch (l) {
    case -4: return 0;
    case -2: return 1;
    case 2: return 2;
    case 4: return 3;
    default: throw Error(Errc::invalid_index, "unsupported phase index l = " + std::to_string(l));
  }
}

int m_slot(int m) {
  switch (m) {
    case 2: return 0;
    case -2: return 1;
    case -4: return 2;
    default: throw Error(Errc::invalid_index, "unsupported difference step m = " + std::to_string(m));
  }
}

StepOperators build(const MultiplierSet& m, double tau) {
  const std::size_t n = m.grid().size();
  const double c = m.c();
  const double c2 = c * c;
  StepOperators ops;
  ops.e_tau.resize(n);
  ops.e_half.resize(n);
  ops.phi1_res.resize(n);
  ops.mom_res.resize(n);
  ops.phi1_nr2.resize(n);
  ops.mom_nr2.resize(n);
  ops.phi1_nr4.resize(n);
  ops.mom_nr4.resize(n);
  ops.lie.resize(n);
  ops.strang_half.resize(n);
  ops.c_inv.assign(m.c_inv().begin(), m.c_inv().end());
  ops.a_c.assign(m.a_c().begin(), m.a_c().end());
  ops.cm1.resize(n);
  ops.res_shift.resize(n);
  const auto br = m.bracket();
  const auto lap = m.laplace();
  for (std::size_t j = 0; j < n; ++j) {
    const double a = ops.a_c[j];
    const double k2 = -lap[j];
    ops.e_tau[j] = std::polar(1.0, tau * a);
    ops.e_half[j] = std::polar(1.0, 0.5 * tau * a);
    const Complex res(0.0, tau * (2.0 * c2 + 0.5 * k2));
    const Complex nr2(0.0, -tau * (c2 + c * br[j]));
    const Complex nr4(0.0, -tau * (3.0 * c2 + c * br[j]));
    ops.phi1_res[j] = phi(1, res);
    ops.mom_res[j] = phi_moment(res);
    ops.phi1_nr2[j] = phi(1, nr2);
    ops.mom_nr2[j] = phi_moment(nr2);
    ops.phi1_nr4[j] = phi(1, nr4);
    ops.mom_nr4[j] = phi_moment(nr4);
    ops.lie[j] = std::polar(1.0, 0.5 * tau * k2);
    ops.strang_half[j] = std::polar(1.0, 0.25 * tau * k2);
    // c/<k>_c - 1 = -k^2 / (<k>_c (<k>_c + c))
    ops.cm1[j] = -k2 / (br[j] * (br[j] + c));
    ops.res_shift[j] = -0.5 * k2 - a;
  }
  const double x = c2 * tau;
  ops.phi1_p2 = phi(1, {0.0, 2.0 * x});
  ops.phi1_m2 = phi(1, {0.0, -2.0 * x});
  ops.phi1_m4 = phi(1, {0.0, -4.0 * x});
  ops.phi2_p2 = phi(2, {0.0, 2.0 * x});
  ops.phi2_m2 = phi(2, {0.0, -2.0 * x});
  ops.phi2_m4 = phi(2, {0.0, -4.0 * x});
  ops.mom_p2 = phi_moment({0.0, 2.0 * x});
  ops.mom_m2 = phi_moment({0.0, -2.0 * x});
  ops.mom_p4 = phi_moment({0.0, 4.0 * x});
  for (int l : {-4, -2, 2, 4})
    for (int mm : {2, -2, -4}) ops.quotients[l_slot(l)][m_slot(mm)] = phi1_quotient(l, mm, x);
  return ops;
}

}  // namespace

Complex StepOperators::omega_quotient(int l, int m) const {
  return quotients[l_slot(l)][m_slot(m)];
}

StepContext::StepContext(const MultiplierSet& m, double tau, double r, Dealias dealias)
    : tau_(tau), r_(r), dealias_(dealias) {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw Error(Errc::invalid_parameter, "time step must be positive and finite");
  if (!(r >= 0.0)) throw Error(Errc::invalid_parameter, "norm order must be nonnegative");
  m_ = std::make_shared<const MultiplierSet>(m);
  ops_ = std::make_shared<const StepOperators>(build(m, tau));
}

}  // namespace kgu
