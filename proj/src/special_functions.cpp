#include "diracnl/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace diracnl {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240;

// Ascending series for K0, K1 on x <= 2 (DLMF 10.31.2). Scaled flag
// multiplies by e^x.
void bessel_k01_series(double x, bool scaled, double& k0, double& k1) {
  const double q = 0.25 * x * x;
  const double lg = std::log(0.5 * x);

  double term0 = 1.0;  // q^k / (k!)^2
  double term1 = 1.0;  // q^k / (k! (k+1)!)
  double i0 = 1.0, i1s = 1.0;
  double s0 = 0.0;     // sum H_k q^k/(k!)^2
  double s1 = term1 * (-2.0 * kEulerGamma + 1.0);  // sum [psi(k+1)+psi(k+2)] q^k/(k!(k+1)!)
  double hk = 0.0;
  for (int k = 1; k < 40; ++k) {
    term0 *= q / (static_cast<double>(k) * k);
    term1 *= q / (static_cast<double>(k) * (k + 1));
    hk += 1.0 / k;
    i0 += term0;
    i1s += term1;
    s0 += term0 * hk;
    s1 += term1 * (-2.0 * kEulerGamma + 2.0 * hk + 1.0 / (k + 1.0));
    if (term0 < 1e-18 * i0) break;
  }
  const double i1 = 0.5 * x * i1s;
  k0 = -(lg + kEulerGamma) * i0 + s0;
  k1 = 1.0 / x + lg * i1 - 0.25 * x * s1;
  if (scaled) {
    const double ex = std::exp(x);
    k0 *= ex;
    k1 *= ex;
  }
}

// Steed's continued fraction (CF2) for x > 2; full double accuracy.
void bessel_k01_cf2(double x, bool scaled, double& k0, double& k1) {
  const double eps = 1e-16;
  const int maxit = 10000;

  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25;
  double q = a1, c = a1, a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= maxit; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) <= eps) break;
  }
  h = a1 * h;
  const double pref = std::sqrt(M_PI / (2.0 * x)) * (scaled ? 1.0 : std::exp(-x));
  k0 = pref / s;
  k1 = k0 * (x + 0.5 - h) / x;
}

void bessel_k01(double x, bool scaled, double& k0, double& k1) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
  if (x <= 2.0)
    bessel_k01_series(x, scaled, k0, k1);
  else
    bessel_k01_cf2(x, scaled, k0, k1);
}

double pick_order(int nu, double k0, double k1) {
  switch (nu) {
    case 0: return k0;
    case -1:
    case 1: return k1;  // K_{-nu} = K_nu
    default: throw std::invalid_argument("bessel_k: order must be -1, 0 or 1");
  }
}

} // namespace

double bessel_k(int nu, double x) {
  double k0, k1;
  bessel_k01(x, false, k0, k1);
  return pick_order(nu, k0, k1);
}

double bessel_k_scaled(int nu, double x) {
  double k0, k1;
  bessel_k01(x, true, k0, k1);
  return pick_order(nu, k0, k1);
}

double erf(double x) { return std::erf(x); }

double erfcx(double x) {
  if (x < 0.0) return 2.0 * std::exp(x * x) - erfcx(-x);
  if (x < 4.0) return std::exp(x * x) * std::erfc(x);

  // Laplace continued fraction, modified Lentz.
  const double tiny = 1e-300;
  double f = tiny, cc = f, dd = 0.0;
  for (int j = 1; j < 200; ++j) {
    const double aj = j == 1 ? 1.0 : 0.5 * (j - 1);
    dd = x + aj * dd;
    if (dd == 0.0) dd = tiny;
    cc = x + aj / cc;
    if (cc == 0.0) cc = tiny;
    dd = 1.0 / dd;
    const double delta = cc * dd;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return f / std::sqrt(M_PI);
}

double a_integral_closed(const AIntegralParams& params) {
  if (!(params.dbar > 0.0))
    throw std::domain_error("a_integral_closed: requires dbar > 0");
  const double db = params.dbar;
  if (params.mu == 0 && params.nu == 0.5) {
    const double bigd = 0.5 * db * db;
    return 0.5 * bessel_k_scaled(0, bigd);
  }
  if (params.mu == 0 && params.nu == 1.0) {
    return 0.5 * M_PI * erfcx(db);
  }
  if (params.mu == 0 && params.nu == 2.0) {
    return -0.25 * M_PI * (2.0 * db * db - 1.0) * erfcx(db) +
           0.5 * std::sqrt(M_PI) * db;
  }
  throw std::invalid_argument(
      "a_integral_closed: closed form only for (nu,mu) in {(1/2,0),(1,0),(2,0)}");
}

double a_integral_quadrature(const AIntegralParams& params,
                             const QuadratureSpec& spec) {
  if (!(params.dbar > 0.0))
    throw std::domain_error("a_integral_quadrature: requires dbar > 0");
  if (!(params.nu > 0.0) || params.mu < 0)
    throw std::domain_error("a_integral_quadrature: requires nu > 0, mu >= 0");
  const double db = params.dbar;
  const double nu = params.nu;
  const int mu = params.mu;
  const double tmax = std::max(50.0, 40.0 / db);
  const auto f = [&](double t) {
    return std::exp(-t * t * db * db) * std::pow(t, mu) /
           std::pow(1.0 + t * t, nu);
  };
  // Wide packets squeeze the whole integrand into t <~ 6.5/dbar, far
  // narrower than the first panel's node spacing; split there so the
  // adaptive pass cannot miss the spike.
  const double core = std::min(6.5 / db, 0.5 * tmax);
  QuadratureSpec half = spec;
  half.abs_tol = 0.5 * spec.abs_tol;
  return integrate_adaptive(f, 0.0, core, half).value +
         integrate_adaptive(f, core, tmax, half).value;
}

std::array<double, 3> a_integral_small_dbar_products(double dbar) {
  if (!(dbar > 0.0))
    throw std::domain_error("a_integral_small_dbar_products: requires dbar > 0");
  return {dbar * a_integral_closed({0.5, 0, dbar}),
          dbar * a_integral_closed({1.0, 0, dbar}),
          dbar * a_integral_closed({2.0, 0, dbar})};
}

} // namespace diracnl
