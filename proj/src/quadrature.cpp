#include "diracnl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace diracnl {

namespace {

// QUADPACK dqk15 nodes/weights. Odd indices are the embedded 7-point
// Gauss abscissae.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEval {
  double value;
  double err;
};

PanelEval gk15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double fv[15];
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  fv[14] = fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double f1 = f(c - x);
    const double f2 = f(c + x);
    fv[2 * j] = f1;
    fv[2 * j + 1] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));
  resasc *= std::abs(h);
  resabs *= std::abs(h);

  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  if (eps50 > std::numeric_limits<double>::min()) err = std::max(err, eps50);
  return {resk * h, err};
}

struct Segment {
  double a, b, value, err;
  int depth;
  bool operator<(const Segment& o) const { return err < o.err; }
};

} // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    const QuadratureSpec& spec) {
  if (!(a < b)) throw std::domain_error("integrate_adaptive: requires a < b");
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_depth < 1)
    throw std::domain_error("integrate_adaptive: invalid QuadratureSpec");

  long evals = 15;
  const PanelEval first = gk15(f, a, b);
  std::priority_queue<Segment> heap;
  heap.push({a, b, first.value, first.err, 0});
  double total = first.value;
  double total_err = first.err;

  // Segment budget bounds the work if the error heap stagnates.
  const std::size_t max_segments = 1 << 15;

  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    Segment worst = heap.top();
    if (worst.depth >= spec.max_depth || heap.size() >= max_segments) {
      throw QuadratureError("integrate_adaptive: tolerance not reached",
                            {total, total_err, evals});
    }
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const PanelEval left = gk15(f, worst.a, mid);
    const PanelEval right = gk15(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push({worst.a, mid, left.value, left.err, worst.depth + 1});
    heap.push({mid, worst.b, right.value, right.err, worst.depth + 1});
  }
  return {total, total_err, evals};
}

namespace {

enum class Phase { Sin, Cos };

double phased(Phase ph, double x) { return ph == Phase::Sin ? std::sin(x) : std::cos(x); }

// Panel summation up to a finite cutoff.
QuadratureResult sum_panels_finite(const Integrand& g, double r, Phase ph,
                                   double kmax, const QuadratureSpec& spec) {
  const double half = M_PI / r;
  // First zero of cos(kr) sits at pi/(2r).
  double lo = 0.0;
  double hi = ph == Phase::Sin ? half : 0.5 * half;
  const std::size_t npanels =
      static_cast<std::size_t>(std::ceil(kmax / half)) + 1;

  QuadratureSpec panel_spec = spec;
  panel_spec.abs_tol = spec.abs_tol / static_cast<double>(npanels);

  const Integrand fk = [&](double k) { return phased(ph, k * r) * g(k); };

  double total = 0.0, comp = 0.0, total_err = 0.0;
  long evals = 0;
  while (lo < kmax) {
    const double b = std::min(hi, kmax);
    const QuadratureResult res = integrate_adaptive(fk, lo, b, panel_spec);
    evals += res.evaluations;
    total_err += res.error_estimate;
    const double y = res.value - comp;
    const double t = total + y;
    comp = (t - total) - y;
    total = t;
    lo = hi;
    hi += half;
  }
  return {total, total_err, evals};
}

// Half-period panels with repeated averaging of the partial sums.
// Evaluates the Abel-regularized value when the envelope only decays
// slowly (1/k, 1/k^2) or tends to a constant.
QuadratureResult sum_panels_accelerated(const Integrand& g, double r, Phase ph,
                                        const QuadratureSpec& spec) {
  const double half = M_PI / r;
  const int max_panels = 512;
  const int min_panels = 8;

  QuadratureSpec panel_spec = spec;
  panel_spec.abs_tol = std::max(spec.abs_tol / 64.0, 1e-15);
  panel_spec.rel_tol = std::min(spec.rel_tol, 1e-10);
  panel_spec.tail_cutoff = std::numeric_limits<double>::infinity();

  const Integrand fk = [&](double k) { return phased(ph, k * r) * g(k); };

  double lo = 0.0;
  double hi = ph == Phase::Sin ? half : 0.5 * half;
  double partial = 0.0;
  long evals = 0;

  // avg[m] holds the m-times averaged sequence tail.
  std::vector<double> avg;
  double est = 0.0, prev_est = 0.0;
  double panel_err = 0.0;

  for (int n = 0; n < max_panels; ++n) {
    const QuadratureResult res = integrate_adaptive(fk, lo, hi, panel_spec);
    evals += res.evaluations;
    panel_err = std::max(panel_err, res.error_estimate);
    partial += res.value;
    lo = hi;
    hi += half;

    double carry = partial;
    for (auto& level : avg) {
      const double next = 0.5 * (level + carry);
      level = carry;
      carry = next;
    }
    avg.push_back(carry);
    if (avg.size() > 24) avg.erase(avg.begin());

    prev_est = est;
    est = carry;
    if (n >= min_panels) {
      const double acc_err = std::abs(est - prev_est);
      if (acc_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(est)) &&
          std::abs(res.value) < 1e3 * std::abs(est) + 1.0) {
        return {est, acc_err + panel_err, evals};
      }
    }
  }
  throw QuadratureError("integrate_oscillatory: panel acceleration did not converge",
                        {est, std::abs(est - prev_est) + panel_err, evals});
}

QuadratureResult oscillatory(const Integrand& g, double r, Phase ph,
                             const QuadratureSpec& spec) {
  if (!(r > 0.0))
    throw std::domain_error("integrate_oscillatory: requires r > 0");
  if (std::isfinite(spec.tail_cutoff)) {
    const double kmax = spec.tail_cutoff;
    if (r * kmax <= 20.0) {
      const Integrand fk = [&](double k) { return phased(ph, k * r) * g(k); };
      return integrate_adaptive(fk, 0.0, kmax, spec);
    }
    return sum_panels_finite(g, r, ph, kmax, spec);
  }
  return sum_panels_accelerated(g, r, ph, spec);
}

} // namespace

QuadratureResult integrate_oscillatory_sin(const Integrand& g, double r,
                                           const QuadratureSpec& spec) {
  return oscillatory(g, r, Phase::Sin, spec);
}

QuadratureResult integrate_oscillatory_cos(const Integrand& g, double r,
                                           const QuadratureSpec& spec) {
  return oscillatory(g, r, Phase::Cos, spec);
}

QuadratureResult integrate_radial_sinc(const Integrand& g, double r,
                                       const QuadratureSpec& spec) {
  if (r < 0.0) throw std::domain_error("integrate_radial_sinc: requires r >= 0");
  if (r == 0.0) {
    if (!std::isfinite(spec.tail_cutoff))
      throw std::domain_error("integrate_radial_sinc: finite tail_cutoff required at r = 0");
    return integrate_adaptive([&](double k) { return k * k * g(k); }, 0.0,
                              spec.tail_cutoff, spec);
  }
  QuadratureResult res =
      integrate_oscillatory_sin([&](double k) { return k * g(k); }, r, spec);
  res.value /= r;
  res.error_estimate /= r;
  return res;
}

} // namespace diracnl
