#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "diracnl/dirac_algebra.hpp"
#include "diracnl/quadrature.hpp"

namespace diracnl {

enum class TransformKind { FW, MO };

/// Initial wave packet carried in the first spinor component.
struct PacketSpec {
  enum class Kind { Gaussian, Delta };
  Kind kind = Kind::Gaussian;
  double d = 1.0;  // Gaussian width in Compton-wavelength units

  static PacketSpec gaussian(double d);
  static PacketSpec delta();

  /// exp(-r^2/2d^2) / (pi^{3/4} d^{3/2}); normalized to unit probability.
  double f(double r) const;
  /// Momentum-space profile (2 d sqrt(pi))^{3/2} exp(-p^2 d^2 / 2).
  double f_p(double p) const;
  /// Momentum beyond which the Gaussian envelope is below 1e-18.
  double momentum_cutoff() const;
};

/// Zeroth or second moment of a transformation kernel, next to the
/// analytic value it should reproduce. Units: dimensionless (order 0) or
/// squared Compton wavelengths (order 2).
struct MomentResult {
  int order = 0;
  Matrix4C matrix;
  Matrix4C analytic_reference;
  double max_deviation() const { return matrix.max_abs_diff(analytic_reference); }
};

/// Kernel moments. Order 0 reduces to the unitary at zero momentum;
/// order 2 is minus the momentum-space Laplacian at zero momentum,
/// computed entrywise by Richardson-extrapolated central differences.
MomentResult moment(TransformKind kind, int order);

enum class ProfileIntegral { D0, DzRegular, B0Regular, B0Approx, T0, Tz, S0, Sz };

/// Distributional term carried symbolically next to a sampled curve.
struct DeltaTerm {
  enum class Support {
    Origin,           // coefficient * delta^3(r)
    TransverseAtAxis  // coefficient * (2/z) delta^2(rho)
  };
  Support support = Support::Origin;
  Complex coefficient{0.0, 0.0};
};

struct ProfileCurve {
  ProfileIntegral which = ProfileIntegral::T0;
  std::vector<double> abscissa;  // r or z, Compton-wavelength units
  std::vector<Complex> values;
  PacketSpec packet;
  std::optional<DeltaTerm> delta_term;
};

std::vector<double> uniform_grid(double lo, double hi, int points);

// --- transformed delta function, Moss-Okninski route ------------------

/// Radial profile of the transformed delta function's first integral,
/// closed form K1(r)/(4 pi^2 r). Throws std::domain_error at r <= 0.
double d0_value(double r);
/// Same via the regularized oscillatory momentum integral (test oracle).
double d0_value_quadrature(double r, const QuadratureSpec& spec = {});
ProfileCurve d0_profile(const std::vector<double>& r_grid);

/// Convergent part of the axial integral (the divergent piece is the
/// flagged transverse delta term): on the z axis
///   A(z) = sgn(z) * (i / 4 pi^2) * int_1^inf a^2 K1(a|z|) da.
/// Purely imaginary and odd in z.
Complex dz_regular_value(double z, const QuadratureSpec& spec = {});
ProfileCurve dz_regular_profile(const std::vector<double>& z_grid,
                                const QuadratureSpec& spec = {});

// --- transformed delta function, Foldy-Wouthuysen route ---------------

/// Slowly varying factor G(k) = 1 / (1 + sqrt(1 + 1/E_k)) of the regular
/// part; G(0) = 1/(1+sqrt 2), G(inf) = 1/2.
double b0_g_function(double k);
double b0_regular_exact(double r, const QuadratureSpec& spec = {});
double b0_regular_approx(double r, double c0);

struct B0Profile {
  ProfileCurve exact;
  ProfileCurve approx;
};
/// c0 must lie in [0.40, 0.52] (the range G spans, with margin).
B0Profile b0_profile(const std::vector<double>& r_grid, double c0 = 0.457,
                     const QuadratureSpec& spec = {});

// --- transformed Gaussian packets --------------------------------------

/// First Moss-Okninski integral, spherical (sinc-kernel) reduction.
double t0_value(const PacketSpec& packet, double r, const QuadratureSpec& spec = {});
/// Same integral through the Gaussian-resolvent representation that trades
/// the momentum integral for a finite-range auxiliary one (test oracle for
/// the route above).
double t0_value_eta(const PacketSpec& packet, double r, const QuadratureSpec& spec = {});
ProfileCurve t0_profile(const PacketSpec& packet, const std::vector<double>& r_grid,
                        const QuadratureSpec& spec = {});

/// Axial Moss-Okninski integral; equals -i d(T0)/dz, purely imaginary and
/// odd in z. Computed by direct quadrature of the axial momentum integrand.
Complex tz_value(const PacketSpec& packet, double z, const QuadratureSpec& spec = {});
ProfileCurve tz_profile(const PacketSpec& packet, const std::vector<double>& z_grid,
                        const QuadratureSpec& spec = {});

/// First Foldy-Wouthuysen integral.
double s0_value(const PacketSpec& packet, double r, const QuadratureSpec& spec = {});
ProfileCurve s0_profile(const PacketSpec& packet, const std::vector<double>& r_grid,
                        const QuadratureSpec& spec = {});

/// Auxiliary integral whose gradient yields the odd Foldy-Wouthuysen
/// integrals (S_j = -i dS_aux/dx_j).
double s_aux_value(const PacketSpec& packet, double r, const QuadratureSpec& spec = {});
/// Axial integral, differentiated under the integral sign.
Complex sz_value(const PacketSpec& packet, double z, const QuadratureSpec& spec = {});
ProfileCurve sz_profile(const PacketSpec& packet, const std::vector<double>& z_grid,
                        const QuadratureSpec& spec = {});

// --- assembled transformed delta function (MO) --------------------------

/// delta(r)-part coefficients (1/2, 0, -i/2, 0) plus callables for the
/// regular part of the spinor on the coordinate axes. The transverse
/// delta hiding in the axial integral is omitted from the callables; it
/// is reported by dz_regular_profile's flag.
struct DeltaTransformMo {
  FourSpinor delta_coefficients;
  std::function<FourSpinor(double)> regular_on_z_axis;
  std::function<FourSpinor(double)> regular_on_x_axis;
};
DeltaTransformMo transformed_delta_mo(const QuadratureSpec& spec = {});

} // namespace diracnl
