#include "diracnl/transform_core.hpp"

#include <cmath>
#include <stdexcept>

#include "diracnl/parallel.hpp"
#include "diracnl/special_functions.hpp"

namespace diracnl {

namespace {

const Complex kImag{0.0, 1.0};
const double kSqrt2 = std::sqrt(2.0);
const double kPi2 = M_PI * M_PI;

// Gaussian momentum envelope drops below 1e-18 of its peak here.
double gaussian_cutoff(double d) { return std::sqrt(2.0 * std::log(1e18)) / d; }

double energy_k(double k) { return std::sqrt(1.0 + k * k); }

} // namespace

PacketSpec PacketSpec::gaussian(double d) {
  if (!(d > 0.0)) throw std::domain_error("PacketSpec: requires d > 0");
  return {Kind::Gaussian, d};
}

PacketSpec PacketSpec::delta() { return {Kind::Delta, 0.0}; }

double PacketSpec::f(double r) const {
  if (kind != Kind::Gaussian)
    throw std::domain_error("PacketSpec::f: delta packet has no sampled profile");
  return std::exp(-0.5 * r * r / (d * d)) / (std::pow(M_PI, 0.75) * std::pow(d, 1.5));
}

double PacketSpec::f_p(double p) const {
  if (kind != Kind::Gaussian) return 1.0;
  return std::pow(2.0 * d * std::sqrt(M_PI), 1.5) * std::exp(-0.5 * p * p * d * d);
}

double PacketSpec::momentum_cutoff() const {
  if (kind != Kind::Gaussian)
    throw std::domain_error("PacketSpec::momentum_cutoff: delta packet has no cutoff");
  return gaussian_cutoff(d);
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) throw std::domain_error("uniform_grid: bad grid");
  std::vector<double> g(static_cast<std::size_t>(points));
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo + h * i;
  g.back() = hi;
  return g;
}

// ---------------------------------------------------------------------
// kernel moments
// ---------------------------------------------------------------------

MomentResult moment(TransformKind kind, int order) {
  const auto& dm = dirac_matrices();
  const auto unitary = [kind](const Momentum3& p) {
    return kind == TransformKind::FW ? u_fw(p) : u_mo(p);
  };

  MomentResult res;
  res.order = order;
  if (order == 0) {
    res.matrix = unitary({0.0, 0.0, 0.0});
    res.analytic_reference = kind == TransformKind::FW
                                 ? Matrix4C::identity()
                                 : (1.0 / kSqrt2) * (dm.beta + dm.delta);
    return res;
  }
  if (order != 2) throw std::invalid_argument("moment: order must be 0 or 2");

  // Second moment: minus the momentum Laplacian of U at p = 0, by central
  // differences with one Richardson step (h and h/2).
  const auto laplacian = [&](double h) {
    const Matrix4C u0 = unitary({0.0, 0.0, 0.0});
    Matrix4C sum;
    for (int axis = 0; axis < 3; ++axis) {
      Momentum3 pp{}, pm{};
      (axis == 0 ? pp.px : axis == 1 ? pp.py : pp.pz) = h;
      (axis == 0 ? pm.px : axis == 1 ? pm.py : pm.pz) = -h;
      sum = sum + (1.0 / (h * h)) * (unitary(pp) + unitary(pm) - 2.0 * u0);
    }
    return sum;
  };
  const double h = 1e-2;
  const Matrix4C lap = (1.0 / 3.0) * (4.0 * laplacian(0.5 * h) - laplacian(h));
  res.matrix = -1.0 * lap;
  res.analytic_reference = kind == TransformKind::FW
                               ? 0.75 * Matrix4C::identity()
                               : (3.0 / kSqrt2) * dm.delta;
  return res;
}

// ---------------------------------------------------------------------
// transformed delta function, MO route
// ---------------------------------------------------------------------

double d0_value(double r) {
  if (!(r > 0.0)) throw std::domain_error("d0_value: requires r > 0");
  return bessel_k(1, r) / (4.0 * kPi2 * r);
}

double d0_value_quadrature(double r, const QuadratureSpec& spec) {
  if (!(r > 0.0)) throw std::domain_error("d0_value_quadrature: requires r > 0");
  // The bare momentum integral is only Abel-convergent; split off the
  // non-decaying unit envelope whose regularized value is 1/r.
  QuadratureSpec osc = spec;
  osc.tail_cutoff = std::numeric_limits<double>::infinity();
  const auto rest = integrate_oscillatory_sin(
      [](double k) { return k / std::sqrt(1.0 + k * k) - 1.0; }, r, osc);
  return (1.0 / r + rest.value) / (4.0 * kPi2 * r);
}

ProfileCurve d0_profile(const std::vector<double>& r_grid) {
  ProfileCurve curve;
  curve.which = ProfileIntegral::D0;
  curve.abscissa = r_grid;
  curve.packet = PacketSpec::delta();
  curve.values.resize(r_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i) curve.values[i] = d0_value(r_grid[i]);
  return curve;
}

Complex dz_regular_value(double z, const QuadratureSpec& spec) {
  if (z == 0.0) return {0.0, 0.0};
  const double az = std::abs(z);
  const double amax = 1.0 + 50.0 / az;
  const auto f = [az](double a) { return a * a * bessel_k(1, a * az); };
  const double val = integrate_adaptive(f, 1.0, amax, spec).value;
  return kImag * (std::copysign(val, z) / (4.0 * kPi2));
}

ProfileCurve dz_regular_profile(const std::vector<double>& z_grid,
                                const QuadratureSpec& spec) {
  ProfileCurve curve;
  curve.which = ProfileIntegral::DzRegular;
  curve.abscissa = z_grid;
  curve.packet = PacketSpec::delta();
  curve.delta_term = DeltaTerm{DeltaTerm::Support::TransverseAtAxis, Complex{1.0, 0.0}};
  curve.values.resize(z_grid.size());
  parallel_for(z_grid.size(),
               [&](std::size_t i) { curve.values[i] = dz_regular_value(z_grid[i], spec); });
  return curve;
}

// ---------------------------------------------------------------------
// transformed delta function, FW route
// ---------------------------------------------------------------------

double b0_g_function(double k) {
  return 1.0 / (1.0 + std::sqrt(1.0 + 1.0 / energy_k(k)));
}

double b0_regular_exact(double r, const QuadratureSpec& spec) {
  if (!(r > 0.0)) throw std::domain_error("b0_regular_exact: requires r > 0");
  // k G(k)/E_k tends to 1/2; peel that off (regularized value 1/(2r)).
  QuadratureSpec osc = spec;
  osc.tail_cutoff = std::numeric_limits<double>::infinity();
  const auto rest = integrate_oscillatory_sin(
      [](double k) { return k * b0_g_function(k) / energy_k(k) - 0.5; }, r, osc);
  return (0.5 / r + rest.value) / (kSqrt2 * 2.0 * kPi2 * r);
}

// G -> c0 in the exact integral; the remaining transform of 1/E_k is
// K1(r)/(2 pi^2 r).
double b0_regular_approx(double r, double c0) {
  if (!(r > 0.0)) throw std::domain_error("b0_regular_approx: requires r > 0");
  return c0 * bessel_k(1, r) / (kSqrt2 * 2.0 * kPi2 * r);
}

B0Profile b0_profile(const std::vector<double>& r_grid, double c0,
                     const QuadratureSpec& spec) {
  if (!(c0 >= 0.40 && c0 <= 0.52))
    throw std::domain_error("b0_profile: c0 outside [0.40, 0.52]");
  B0Profile out;
  out.exact.which = ProfileIntegral::B0Regular;
  out.exact.abscissa = r_grid;
  out.exact.packet = PacketSpec::delta();
  out.exact.delta_term = DeltaTerm{DeltaTerm::Support::Origin, Complex{1.0 / kSqrt2, 0.0}};
  out.exact.values.resize(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t i) {
    out.exact.values[i] = b0_regular_exact(r_grid[i], spec);
  });

  out.approx = out.exact;
  out.approx.which = ProfileIntegral::B0Approx;
  for (std::size_t i = 0; i < r_grid.size(); ++i)
    out.approx.values[i] = b0_regular_approx(r_grid[i], c0);
  return out;
}

// ---------------------------------------------------------------------
// transformed Gaussian packets
// ---------------------------------------------------------------------

namespace {

void require_gaussian(const PacketSpec& packet, const char* who) {
  if (packet.kind != PacketSpec::Kind::Gaussian)
    throw std::domain_error(std::string(who) + ": requires a Gaussian packet");
}

// prefactor of the T integrals: sqrt(2) (d sqrt(pi))^{3/2} / (2 pi^2);
// combined with the spherical reduction measure this multiplies
// int sinc(kr) k^2 e^{-k^2 d^2/2} / E_k dk.
double t_prefactor(double d) {
  return std::pow(2.0 * d * std::sqrt(M_PI), 1.5) / (2.0 * kPi2) * 0.5;
}

double s_prefactor(double d) {
  return std::pow(2.0 * d * std::sqrt(M_PI), 1.5) / (2.0 * kPi2);
}

} // namespace

double t0_value(const PacketSpec& packet, double r, const QuadratureSpec& spec) {
  require_gaussian(packet, "t0_value");
  const double d = packet.d;
  QuadratureSpec s = spec;
  s.tail_cutoff = gaussian_cutoff(d);
  const auto g = [d](double k) {
    return std::exp(-0.5 * k * k * d * d) / energy_k(k);
  };
  return t_prefactor(d) * integrate_radial_sinc(g, r, s).value;
}

double t0_value_eta(const PacketSpec& packet, double r, const QuadratureSpec& spec) {
  require_gaussian(packet, "t0_value_eta");
  const double d = packet.d;
  const double half_d2 = 0.5 * d * d;
  // Range |eta| <= 6 keeps the dropped tail below 1e-15 of the value.
  const auto f = [half_d2, r](double eta) {
    const double s = half_d2 + eta * eta;
    return std::exp(-eta * eta) * std::exp(-0.25 * r * r / s) /
           (4.0 * std::pow(s, 1.5));
  };
  const double integral = 2.0 * integrate_adaptive(f, 0.0, 6.0, spec).value;
  return std::pow(d * std::sqrt(M_PI), 1.5) / (kSqrt2 * kPi2) * integral;
}

Complex tz_value(const PacketSpec& packet, double z, const QuadratureSpec& spec) {
  require_gaussian(packet, "tz_value");
  if (z == 0.0) return {0.0, 0.0};
  const double d = packet.d;
  const double az = std::abs(z);
  QuadratureSpec s = spec;
  s.tail_cutoff = gaussian_cutoff(d);
  const auto g = [d](double k) {
    return std::exp(-0.5 * k * k * d * d) / energy_k(k);
  };
  const double jsin =
      integrate_oscillatory_sin([&](double k) { return k * g(k); }, az, s).value;
  const double jcos =
      integrate_oscillatory_cos([&](double k) { return k * k * g(k); }, az, s).value;
  const double val = t_prefactor(d) * (jsin - az * jcos) / (az * az);
  return kImag * std::copysign(val, z);
}

double s0_value(const PacketSpec& packet, double r, const QuadratureSpec& spec) {
  require_gaussian(packet, "s0_value");
  const double d = packet.d;
  QuadratureSpec s = spec;
  s.tail_cutoff = gaussian_cutoff(d);
  const auto g = [d](double k) {
    const double e = energy_k(k);
    return std::exp(-0.5 * k * k * d * d) * std::sqrt(0.5 * (e + 1.0) / e);
  };
  return s_prefactor(d) * integrate_radial_sinc(g, r, s).value;
}

double s_aux_value(const PacketSpec& packet, double r, const QuadratureSpec& spec) {
  require_gaussian(packet, "s_aux_value");
  const double d = packet.d;
  QuadratureSpec s = spec;
  s.tail_cutoff = gaussian_cutoff(d);
  const auto g = [d](double k) {
    const double e = energy_k(k);
    return std::exp(-0.5 * k * k * d * d) / std::sqrt(2.0 * e * (e + 1.0));
  };
  return s_prefactor(d) * integrate_radial_sinc(g, r, s).value;
}

Complex sz_value(const PacketSpec& packet, double z, const QuadratureSpec& spec) {
  require_gaussian(packet, "sz_value");
  if (z == 0.0) return {0.0, 0.0};
  const double d = packet.d;
  const double az = std::abs(z);
  QuadratureSpec s = spec;
  s.tail_cutoff = gaussian_cutoff(d);
  const auto g = [d](double k) {
    const double e = energy_k(k);
    return std::exp(-0.5 * k * k * d * d) / std::sqrt(2.0 * e * (e + 1.0));
  };
  const double jsin =
      integrate_oscillatory_sin([&](double k) { return k * g(k); }, az, s).value;
  const double jcos =
      integrate_oscillatory_cos([&](double k) { return k * k * g(k); }, az, s).value;
  const double val = s_prefactor(d) * (jsin - az * jcos) / (az * az);
  return kImag * std::copysign(val, z);
}

namespace {

ProfileCurve sample_real(ProfileIntegral which, const PacketSpec& packet,
                         const std::vector<double>& grid,
                         const std::function<double(double)>& fn) {
  ProfileCurve curve;
  curve.which = which;
  curve.abscissa = grid;
  curve.packet = packet;
  curve.values.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { curve.values[i] = fn(grid[i]); });
  return curve;
}

ProfileCurve sample_complex(ProfileIntegral which, const PacketSpec& packet,
                            const std::vector<double>& grid,
                            const std::function<Complex(double)>& fn) {
  ProfileCurve curve;
  curve.which = which;
  curve.abscissa = grid;
  curve.packet = packet;
  curve.values.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { curve.values[i] = fn(grid[i]); });
  return curve;
}

} // namespace

ProfileCurve t0_profile(const PacketSpec& packet, const std::vector<double>& r_grid,
                        const QuadratureSpec& spec) {
  return sample_real(ProfileIntegral::T0, packet, r_grid,
                     [&](double r) { return t0_value(packet, r, spec); });
}

ProfileCurve tz_profile(const PacketSpec& packet, const std::vector<double>& z_grid,
                        const QuadratureSpec& spec) {
  return sample_complex(ProfileIntegral::Tz, packet, z_grid,
                        [&](double z) { return tz_value(packet, z, spec); });
}

ProfileCurve s0_profile(const PacketSpec& packet, const std::vector<double>& r_grid,
                        const QuadratureSpec& spec) {
  return sample_real(ProfileIntegral::S0, packet, r_grid,
                     [&](double r) { return s0_value(packet, r, spec); });
}

ProfileCurve sz_profile(const PacketSpec& packet, const std::vector<double>& z_grid,
                        const QuadratureSpec& spec) {
  return sample_complex(ProfileIntegral::Sz, packet, z_grid,
                        [&](double z) { return sz_value(packet, z, spec); });
}

// ---------------------------------------------------------------------
// assembled transformed delta function (MO)
// ---------------------------------------------------------------------

DeltaTransformMo transformed_delta_mo(const QuadratureSpec& spec) {
  DeltaTransformMo out;
  out.delta_coefficients[0] = 0.5;
  out.delta_coefficients[1] = 0.0;
  out.delta_coefficients[2] = -0.5 * kImag;
  out.delta_coefficients[3] = 0.0;

  // Spinor column (D0 + i Dz, i Dx - Dy, i D0 + Dz, Dx + i Dy); the odd
  // integrals vanish on the axes transverse to them.
  out.regular_on_z_axis = [spec](double z) {
    const double d0 = d0_value(std::abs(z));
    const Complex dz = dz_regular_value(z, spec);
    FourSpinor s;
    s[0] = d0 + kImag * dz;
    s[1] = 0.0;
    s[2] = kImag * d0 + dz;
    s[3] = 0.0;
    return s;
  };
  out.regular_on_x_axis = [spec](double x) {
    const double d0 = d0_value(std::abs(x));
    const Complex dx = dz_regular_value(x, spec);
    FourSpinor s;
    s[0] = d0;
    s[1] = kImag * dx;
    s[2] = kImag * d0;
    s[3] = dx;
    return s;
  };
  return out;
}

} // namespace diracnl
