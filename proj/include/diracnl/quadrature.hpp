#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace diracnl {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_depth = 40;
  /// Truncation point for semi-infinite integrals whose envelope is
  /// negligible beyond it. Infinite means "no usable cutoff": the
  /// oscillatory engine then sums half-period panels and accelerates the
  /// partial sums instead.
  double tail_cutoff = std::numeric_limits<double>::infinity();
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Thrown when the requested tolerance cannot be met; carries the best
/// estimate and its error bound.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& msg, QuadratureResult best)
      : std::runtime_error(msg), best_(best) {}
  const QuadratureResult& best() const { return best_; }

private:
  QuadratureResult best_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (G7,K15) with interval bisection on
/// [a, b]. Nodes never touch the endpoints, so integrable endpoint
/// singularities are tolerated.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    const QuadratureSpec& spec = {});

/// I = int_0^inf sin(k r) g(k) dk for r > 0.
/// Finite spec.tail_cutoff: plain adaptive when r*cutoff <= 20, otherwise
/// one adaptive pass per half period of the sine, summed.
/// Infinite cutoff: half-period panels with repeated averaging (Euler
/// acceleration) of the partial sums; this evaluates the Abel-regularized
/// value for envelopes that decay slowly or merely approach a constant.
QuadratureResult integrate_oscillatory_sin(const Integrand& g, double r,
                                           const QuadratureSpec& spec = {});

/// Same for int_0^inf cos(k r) g(k) dk.
QuadratureResult integrate_oscillatory_cos(const Integrand& g, double r,
                                           const QuadratureSpec& spec = {});

/// Spherical reduction of a radial 3D Fourier transform:
/// int_0^inf (sin(kr)/(kr)) k^2 g(k) dk, with the sinc -> 1 limit at r = 0.
/// Requires a finite spec.tail_cutoff at r = 0.
QuadratureResult integrate_radial_sinc(const Integrand& g, double r,
                                       const QuadratureSpec& spec = {});

} // namespace diracnl
