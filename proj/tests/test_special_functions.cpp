#include <doctest.h>

#include <cmath>
#include <limits>

#include "diracnl/special_functions.hpp"

using namespace diracnl;

namespace {
const double kSqrtPi = std::sqrt(M_PI);

// K_0 through the Fourier identity int_{-inf}^{inf} e^{itz}/sqrt(t^2+a^2) dt
// = 2 K_0(az): evaluate the cosine half-line integral numerically.
double k0_quadrature_oracle(double a) {
  QuadratureSpec spec;
  spec.abs_tol = 1e-11;
  spec.tail_cutoff = std::numeric_limits<double>::infinity();
  return integrate_oscillatory_cos(
             [a](double t) { return 1.0 / std::sqrt(t * t + a * a); }, 1.0, spec)
      .value;
}
} // namespace

TEST_CASE("bessel_k against the Fourier-identity oracle") {
  CHECK(bessel_k(0, 1.0) == doctest::Approx(k0_quadrature_oracle(1.0)).epsilon(1e-9));
  CHECK(bessel_k(0, 0.1) == doctest::Approx(k0_quadrature_oracle(0.1)).epsilon(1e-9));
}

TEST_CASE("bessel_k reference values and asymptotics") {
  CHECK(bessel_k(0, 1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-13));
  CHECK(bessel_k(1, 1.0) == doctest::Approx(0.60190723019723458).epsilon(1e-13));
  CHECK(bessel_k(0, 0.1) == doctest::Approx(2.4270690247020166).epsilon(1e-13));
  CHECK(bessel_k(1, 0.1) == doctest::Approx(9.8538447808706059).epsilon(1e-13));
  CHECK(bessel_k(0, 5.0) == doctest::Approx(3.6910983340425947e-3).epsilon(1e-13));

  // series/continued-fraction handover at x = 2 is seamless
  CHECK(bessel_k(0, 2.0 - 1e-12) == doctest::Approx(bessel_k(0, 2.0 + 1e-12)).epsilon(1e-10));
  CHECK(bessel_k(1, 2.0 - 1e-12) == doctest::Approx(bessel_k(1, 2.0 + 1e-12)).epsilon(1e-10));

  // leading large-x form sqrt(pi/2x) e^{-x}; the 3/(8x) correction puts
  // K_1(20) about 1.85% above it
  const double lead = bessel_k(1, 20.0) * std::exp(20.0) * std::sqrt(20.0 / (M_PI / 2.0));
  CHECK(lead == doctest::Approx(1.0).epsilon(0.02));
  CHECK(lead == doctest::Approx(1.0 + 3.0 / 160.0).epsilon(1e-3));

  // scaled variant survives far beyond the underflow point
  CHECK(bessel_k_scaled(0, 1250.0) ==
        doctest::Approx(std::sqrt(M_PI / 2500.0) * (1.0 - 1.0 / (8.0 * 1250.0)))
            .epsilon(1e-5));
  CHECK(bessel_k(0, 800.0) == 0.0);

  // reflection K_{-1} = K_1
  CHECK(bessel_k(-1, 0.37) == bessel_k(1, 0.37));

  CHECK_THROWS_AS(bessel_k(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_k(0, -1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_k(2, 1.0), std::invalid_argument);
}

TEST_CASE("erf basics and quadrature oracle") {
  CHECK(diracnl::erf(0.0) == 0.0);
  CHECK(std::fabs(diracnl::erf(10.0) - 1.0) <= 1e-15);
  CHECK(diracnl::erf(-1.0) == -diracnl::erf(1.0));

  const double oracle =
      integrate_adaptive([](double t) { return 2.0 / kSqrtPi * std::exp(-t * t); },
                         0.0, 1.0, {1e-13, 1e-13, 40, 0.0})
          .value;
  CHECK(diracnl::erf(1.0) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("erfcx: product region, continued fraction, crossover") {
  CHECK(erfcx(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (double x : {3.5, 4.0, 4.5, 6.0}) {
    // the direct product is still representable here
    const double product = std::exp(x * x) * std::erfc(x);
    CHECK(erfcx(x) == doctest::Approx(product).epsilon(1e-13));
  }
  // far region against the asymptotic series
  const double x = 40.0;
  const double asym = (1.0 - 0.5 / (x * x) + 0.75 / (x * x * x * x)) / (x * kSqrtPi);
  CHECK(erfcx(x) == doctest::Approx(asym).epsilon(1e-8));
}

TEST_CASE("A integrals: closed forms") {
  SUBCASE("A_{1/2}^0 is e^D K0(D)/2 with D = dbar^2/2") {
    CHECK(a_integral_closed({0.5, 0, 1.0}) ==
          doctest::Approx(0.5 * std::exp(0.5) * bessel_k(0, 0.5)).epsilon(1e-14));
  }
  SUBCASE("large-dbar products approach 1/2") {
    for (double nu : {0.5, 1.0, 2.0}) {
      const double prod = 50.0 / kSqrtPi * a_integral_closed({nu, 0, 50.0});
      CHECK(std::fabs(prod - 0.5) <= 0.001 * 0.5);
    }
  }
  SUBCASE("A_2^0 closed vs quadrature at dbar = 0.3") {
    CHECK(std::fabs(a_integral_closed({2.0, 0, 0.3}) -
                    a_integral_quadrature({2.0, 0, 0.3})) <= 1e-9);
  }
  CHECK_THROWS_AS(a_integral_closed({1.5, 0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(a_integral_closed({1.0, 1, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(a_integral_closed({1.0, 0, 0.0}), std::domain_error);
}

TEST_CASE("A integrals: quadrature route") {
  SUBCASE("matches closed forms over dbar in {0.05, 0.5, 1, 5}") {
    for (double nu : {0.5, 1.0, 2.0})
      for (double db : {0.05, 0.5, 1.0, 5.0}) {
        const double c = a_integral_closed({nu, 0, db});
        const double q = a_integral_quadrature({nu, 0, db});
        CHECK(std::fabs(c - q) <= 1e-8);
      }
  }
  SUBCASE("dbar -> 0 limit of A_1^0 is pi/2") {
    CHECK(a_integral_quadrature({1.0, 0, 1e-6}) ==
          doctest::Approx(0.5 * M_PI).epsilon(1e-5));
  }
  SUBCASE("(dbar/sqrt(pi)) A_{1/2}^0 at dbar = 50 is 1/2 within 0.1%") {
    const double prod = 50.0 / kSqrtPi * a_integral_quadrature({0.5, 0, 50.0});
    CHECK(std::fabs(prod - 0.5) <= 0.001 * 0.5);
  }
  SUBCASE("general order goes through quadrature only") {
    const double v = a_integral_quadrature({1.5, 2, 1.0});
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));
  }
}

TEST_CASE("A integrals: small-dbar products vanish") {
  const auto tiny = a_integral_small_dbar_products(1e-3);
  for (double v : tiny) CHECK(v < 0.01);

  // dbar A_{1/2}^0 tracks -dbar ln(D)/2 in the logarithmic regime
  const double db = 1e-4;
  const auto p = a_integral_small_dbar_products(db);
  const double logified = db * 0.5 * (-std::log(0.5 * db * db));
  CHECK(p[0] == doctest::Approx(logified).epsilon(0.04));

  const auto larger = a_integral_small_dbar_products(1e-2);
  for (int i = 0; i < 3; ++i) CHECK(p[i] < larger[i]);
}

TEST_CASE("closed vs quadrature agreement over a dbar sweep") {
  for (double db = 0.05; db <= 10.0; db *= 1.9)
    for (double nu : {0.5, 1.0, 2.0})
      CHECK(std::fabs(a_integral_closed({nu, 0, db}) -
                      a_integral_quadrature({nu, 0, db})) <= 1e-8);
}
