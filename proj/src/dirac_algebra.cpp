#include "diracnl/dirac_algebra.hpp"

namespace diracnl {

namespace {

const Complex kI{0.0, 1.0};

DiracMatrices build_matrices() {
  DiracMatrices m;

  // alpha_j = [[0, sigma_j], [sigma_j, 0]], beta = diag(1,1,-1,-1)
  m.alpha_x(0, 3) = 1.0;
  m.alpha_x(1, 2) = 1.0;
  m.alpha_x(2, 1) = 1.0;
  m.alpha_x(3, 0) = 1.0;

  m.alpha_y(0, 3) = -kI;
  m.alpha_y(1, 2) = kI;
  m.alpha_y(2, 1) = -kI;
  m.alpha_y(3, 0) = kI;

  m.alpha_z(0, 2) = 1.0;
  m.alpha_z(1, 3) = -1.0;
  m.alpha_z(2, 0) = 1.0;
  m.alpha_z(3, 1) = -1.0;

  m.beta(0, 0) = 1.0;
  m.beta(1, 1) = 1.0;
  m.beta(2, 2) = -1.0;
  m.beta(3, 3) = -1.0;

  m.delta = m.alpha_x * m.alpha_y * m.alpha_z * m.beta;
  return m;
}

} // namespace

const DiracMatrices& dirac_matrices() {
  static const DiracMatrices m = build_matrices();
  return m;
}

Matrix4C hamiltonian(const Momentum3& p) {
  const auto& d = dirac_matrices();
  return p.px * d.alpha_x + p.py * d.alpha_y + p.pz * d.alpha_z + d.beta;
}

Matrix4C hamiltonian_prime(const Momentum3& p) {
  const auto& d = dirac_matrices();
  return p.px * d.alpha_x + p.py * d.alpha_y + p.pz * d.alpha_z + d.delta;
}

Matrix4C u_fw(const Momentum3& p) {
  const auto& d = dirac_matrices();
  const double e = p.energy();
  const double n = std::sqrt(2.0 * e * (e + 1.0));
  return (1.0 / n) * (e * Matrix4C::identity() + d.beta * hamiltonian(p));
}

Matrix4C v_op() {
  const auto& d = dirac_matrices();
  return (1.0 / std::sqrt(2.0)) * (d.delta * (d.delta + d.beta));
}

Matrix4C u_mo(const Momentum3& p) {
  const auto& d = dirac_matrices();
  const double e = p.energy();
  return (1.0 / std::sqrt(2.0)) * (d.beta + (1.0 / e) * hamiltonian_prime(p));
}

Matrix4C u_mo_total(const Momentum3& p) { return u_mo(p) * v_op(); }

} // namespace diracnl
