#pragma once

#include "diracnl/matrix4.hpp"

namespace diracnl {

/// The standard-representation Dirac matrices plus the composite
/// delta = alpha_x alpha_y alpha_z beta used by the Moss-Okninski route.
struct DiracMatrices {
  Matrix4C alpha_x;
  Matrix4C alpha_y;
  Matrix4C alpha_z;
  Matrix4C beta;
  Matrix4C delta;
};

const DiracMatrices& dirac_matrices();

/// Free Dirac Hamiltonian H_p = alpha.p + beta (natural units).
Matrix4C hamiltonian(const Momentum3& p);

/// Rotated Hamiltonian H'_p = alpha.p + delta; traceless diagonal,
/// equals V H_p V^dagger.
Matrix4C hamiltonian_prime(const Momentum3& p);

/// Foldy-Wouthuysen unitary (E_p + beta H_p) / sqrt(2 E_p (E_p + 1)).
Matrix4C u_fw(const Momentum3& p);

/// Constant unitary V = delta (delta + beta) / sqrt(2).
Matrix4C v_op();

/// Momentum-dependent step of the Moss-Okninski transformation:
/// U_MO = (beta + H'_p / E_p) / sqrt(2). Hermitian involution.
Matrix4C u_mo(const Momentum3& p);

/// Convenience composition U_MO(p) V applied in one step; acting on a
/// wave function it performs both stages of the Moss-Okninski transform.
Matrix4C u_mo_total(const Momentum3& p);

} // namespace diracnl
