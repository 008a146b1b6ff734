#include "diracnl/variance.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "diracnl/parallel.hpp"
#include "diracnl/special_functions.hpp"

namespace diracnl {

namespace {

const double kSqrtPi = std::sqrt(M_PI);
const double kPi2 = M_PI * M_PI;

double energy_k(double p) { return std::sqrt(1.0 + p * p); }

// |f_p|^2 drops below 1e-16 of its peak here.
double oracle_cutoff(double d) { return std::sqrt(std::log(1e16)) / d; }

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Two-level refinement; the oracle contract rejects grids that have not
// converged to 1e-4 relative.
double simpson_checked(const std::function<double(double)>& f, double a, double b) {
  const double coarse = simpson(f, a, b, 4000);
  const double fine = simpson(f, a, b, 8000);
  const double scale = std::max(std::abs(fine), 1e-300);
  if (std::abs(fine - coarse) / scale > 1e-4)
    throw std::runtime_error("variance_oracle: grid refinements disagree");
  return fine;
}

// Numeric <r^0> for the MO-transformed packet (exactly 1/2 + 1/2).
double mo_norm_numeric(double d) {
  const PacketSpec packet = PacketSpec::gaussian(d);
  // local part: (1/2) int |f|^2 d^3r
  const auto fr = [&](double r) {
    const double v = packet.f(r);
    return r * r * v * v;
  };
  const double r0_11 = 0.5 * 4.0 * M_PI *
                       simpson(fr, 0.0, 10.0 * d, 2000);
  // integral part: (1/(4 pi^2)) int p^2 |f_p|^2 dp
  const auto fp = [&](double p) {
    const double v = packet.f_p(p);
    return p * p * v * v;
  };
  const double r0_22 =
      simpson(fp, 0.0, oracle_cutoff(d), 2000) / (4.0 * kPi2);
  return r0_11 + r0_22;
}

// Numeric <r^0> for the FW-transformed packet (exactly 1 by Parseval).
double fw_norm_numeric(double d) {
  const PacketSpec packet = PacketSpec::gaussian(d);
  const auto fp = [&](double p) {
    const double v = packet.f_p(p);
    const double e = energy_k(p);
    const double n2 = 2.0 * e * (e + 1.0);
    return p * p * v * v * ((e + 1.0) * (e + 1.0) + p * p) / n2;
  };
  return simpson(fp, 0.0, oracle_cutoff(d), 2000) / (2.0 * kPi2);
}

} // namespace

VarianceResult variance_mo_closed(double d) {
  if (!(d > 0.0)) throw std::domain_error("variance_mo_closed: requires d > 0");
  const double d2 = d * d;
  const double a1 = a_integral_closed({1.0, 0, d});
  const double a2 = a_integral_closed({2.0, 0, d});
  const double r2_11 = 0.75 * d2;
  const double r2_22 = 2.75 * d2 - 2.0 * d2 * (d / kSqrtPi) * (a1 + a2);

  VarianceResult res;
  res.kind = TransformKind::MO;
  res.d = d;
  res.value = r2_11 + r2_22;
  res.norm_check = mo_norm_numeric(d);
  res.breakdown = {{"r0_11", 0.5},
                   {"r0_22", 0.5},
                   {"r2_11", r2_11},
                   {"r2_22", r2_22}};
  return res;
}

VarianceResult variance_fw_closed(double d) {
  if (!(d > 0.0)) throw std::domain_error("variance_fw_closed: requires d > 0");
  const double d2 = d * d;
  const double ah = a_integral_closed({0.5, 0, d});
  const double a1 = a_integral_closed({1.0, 0, d});
  const double a2 = a_integral_closed({2.0, 0, d});
  const double correction = d2 * (d / kSqrtPi) * (a1 - a2 - 4.0 * ah);

  VarianceResult res;
  res.kind = TransformKind::FW;
  res.d = d;
  res.value = 3.5 * d2 + correction;
  res.norm_check = fw_norm_numeric(d);
  res.breakdown = {{"r0", 1.0},
                   {"a_half", ah},
                   {"a_one", a1},
                   {"a_two", a2},
                   {"correction", correction}};
  return res;
}

VarianceResult variance_closed(TransformKind kind, double d) {
  return kind == TransformKind::MO ? variance_mo_closed(d) : variance_fw_closed(d);
}

double variance_oracle(TransformKind kind, double d) {
  if (!(d > 0.0)) throw std::domain_error("variance_oracle: requires d > 0");
  const PacketSpec packet = PacketSpec::gaussian(d);
  const double d2 = d * d;
  const double pmax = oracle_cutoff(d);

  if (kind == TransformKind::MO) {
    // Integral part: <r^2>_22 = (1/4) int |grad_p (f_p w_p / E_p)|^2,
    // reduced over angles to
    //   (1/(8 pi^2)) int p^2 [2 E^2 g'^2 + 6 g^2 + 4 p g g'] dp
    // with g = f_p / E_p.
    const auto integrand = [&](double p) {
      const double e = energy_k(p);
      const double g = packet.f_p(p) / e;
      const double gp = -p * g * (d2 + 1.0 / (e * e));
      return p * p * (2.0 * e * e * gp * gp + 6.0 * g * g + 4.0 * p * g * gp);
    };
    const double r2_22 = simpson_checked(integrand, 0.0, pmax) / (8.0 * kPi2);
    // Local part: (1/2) int r^2 |f|^2 d^3r, evaluated in position space.
    const auto fr = [&](double r) {
      const double v = packet.f(r);
      return r * r * r * r * v * v;
    };
    const double r2_11 = 0.5 * 4.0 * M_PI * simpson_checked(fr, 0.0, 12.0 * d);
    return r2_11 + r2_22;
  }

  // FW: <r^2> = int |grad_p (f_p column / N_p)|^2 reduced to
  //   (1/(2 pi^2)) int p^2 [a'^2 + p^2 b'^2 + 3 b^2 + 2 p b b'] dp
  // with a = f_p sqrt((E+1)/(2E)) and b = f_p / N_p.
  const auto integrand = [&](double p) {
    const double e = energy_k(p);
    const double f = packet.f_p(p);
    const double fp = -p * d2 * f;
    const double w = std::sqrt(0.5 * (e + 1.0) / e);
    const double wp = -p / (4.0 * e * e * e * w);
    const double ap = fp * w + f * wp;
    const double n = std::sqrt(2.0 * e * (e + 1.0));
    const double np = p * (2.0 * e + 1.0) / (e * n);
    const double b = f / n;
    const double bp = fp / n - f * np / (n * n);
    return p * p * (ap * ap + p * p * bp * bp + 3.0 * b * b + 2.0 * p * b * bp);
  };
  return simpson_checked(integrand, 0.0, pmax) / (2.0 * kPi2);
}

double variance_oracle_identity(double d) {
  if (!(d > 0.0)) throw std::domain_error("variance_oracle_identity: requires d > 0");
  const PacketSpec packet = PacketSpec::gaussian(d);
  const double d2 = d * d;
  const auto integrand = [&](double p) {
    const double fp = -p * d2 * packet.f_p(p);
    return p * p * fp * fp;
  };
  return simpson_checked(integrand, 0.0, oracle_cutoff(d)) / (2.0 * kPi2);
}

Complex mo_cross_moment(int n, double d) {
  if (n != 0 && n != 2)
    throw std::invalid_argument("mo_cross_moment: n must be 0 or 2");
  if (!(d > 0.0)) throw std::domain_error("mo_cross_moment: requires d > 0");
  const PacketSpec packet = PacketSpec::gaussian(d);
  const double d2 = d * d;

  // <r^n>_12 = (i / 8 pi^2) * [int p^3 h_n f_p^2 / E dp] * [int_0^pi cos sin]
  // with h_0 = 1 and h_2 f_p the transform of r^2 f. Both factors evaluated
  // numerically; the angular one vanishes.
  const auto radial = [&](double p) {
    const double f = packet.f_p(p);
    const double h = n == 0 ? 1.0 : 3.0 * d2 - p * p * d2 * d2;
    return p * p * p * h * f * f / energy_k(p);
  };
  const double rad =
      integrate_adaptive(radial, 0.0, oracle_cutoff(d), {}).value;
  const double ang =
      integrate_adaptive([](double th) { return std::cos(th) * std::sin(th); },
                         0.0, M_PI, {})
          .value;
  return Complex{0.0, rad * ang / (8.0 * kPi2)};
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 2 || !(lo > 0.0) || !(hi > lo))
    throw std::domain_error("log_grid: bad grid");
  std::vector<double> g(static_cast<std::size_t>(points));
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i)
    g[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  g.back() = hi;
  return g;
}

std::vector<VarianceResult> variance_sweep(TransformKind kind,
                                           const std::vector<double>& d_grid) {
  for (std::size_t i = 1; i < d_grid.size(); ++i)
    if (!(d_grid[i] > d_grid[i - 1]))
      throw std::domain_error("variance_sweep: d grid must be increasing");
  std::vector<VarianceResult> out(d_grid.size());
  parallel_for(d_grid.size(),
               [&](std::size_t i) { out[i] = variance_closed(kind, d_grid[i]); });
  return out;
}

} // namespace diracnl
