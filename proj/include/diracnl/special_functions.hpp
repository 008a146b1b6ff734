#pragma once

#include <array>

#include "diracnl/quadrature.hpp"

namespace diracnl {

/// Modified Bessel function of the second kind (MacDonald function),
/// orders 0 and 1 (order -1 maps to 1 through K_{-nu} = K_nu).
/// Relative error <= 1e-12 for x in [1e-6, 700]; underflows to 0 beyond.
/// Throws std::domain_error for x <= 0.
double bessel_k(int nu, double x);

/// e^x K_nu(x); stays representable at large x where K_nu underflows.
double bessel_k_scaled(int nu, double x);

/// Error function and the scaled complementary error function
/// erfcx(x) = e^{x^2} erfc(x) (stable where the naive product overflows).
double erf(double x);
double erfcx(double x);

/// Parameters of the Gaussian-damped rational integral
/// A_nu^mu(dbar) = int_0^inf exp(-t^2 dbar^2) t^mu / (1+t^2)^nu dt,
/// with dbar the packet width in Compton-wavelength units.
struct AIntegralParams {
  double nu = 1.0;
  int mu = 0;
  double dbar = 1.0;
};

/// Closed forms, implemented for (nu, mu) in {(1/2,0), (1,0), (2,0)}:
///   A_{1/2}^0 = (1/2) e^D K_0(D),  D = dbar^2/2
///   A_1^0     = (pi/2) erfcx(dbar)
///   A_2^0     = -(pi/4)(2 dbar^2 - 1) erfcx(dbar) + sqrt(pi) dbar / 2
/// Throws std::invalid_argument for unsupported orders,
/// std::domain_error for dbar <= 0.
double a_integral_closed(const AIntegralParams& params);

/// Direct adaptive quadrature of the defining integral, any nu > 0 and
/// integer mu >= 0; truncated at t_max = max(50, 40/dbar).
double a_integral_quadrature(const AIntegralParams& params,
                             const QuadratureSpec& spec = {});

/// { dbar*A_{1/2}^0, dbar*A_1^0, dbar*A_2^0 } for limit verification.
std::array<double, 3> a_integral_small_dbar_products(double dbar);

} // namespace diracnl
