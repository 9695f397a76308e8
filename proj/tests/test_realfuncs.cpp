#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oracle.hpp"
#include "wordstat/realfuncs.hpp"

using namespace wordstat;
using oracle::HP;

namespace {

double d(const HP& v) { return static_cast<double>(v); }

const double kPoisson = 1.0 - 1.0 / std::numbers::e;

double second_difference(RealFunction f, double x, double h) {
  return evaluate(f, x + h) - 2.0 * evaluate(f, x) + evaluate(f, x - h);
}

}  // namespace

TEST_CASE("elementary functions against direct high-precision formulas") {
  for (const double x : {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
    const HP X = x;
    CHECK(varphi(x) == doctest::Approx(d(oracle::hp_varphi(X))).epsilon(1e-14));
    CHECK(theta(x) == doctest::Approx(d(pow(X, 1 - X) * exp(X))).epsilon(1e-14));
    CHECK(eta(x) == doctest::Approx(d(pow(X, 1 - X) * oracle::hp_varphi(X))).epsilon(1e-14));
    CHECK(kappa(x) == doctest::Approx(d(pow(exp(HP(1)) / 2, 1 - X) * pow(1 - X, -(1 - X)))).epsilon(1e-14));
    CHECK(nu(x) == doctest::Approx(d(oracle::hp_nu(X))).epsilon(1e-14));
    CHECK(gamma_fn(x) == doctest::Approx(std::sqrt(x - x * x)));
  }
}

TEST_CASE("endpoint values are exact") {
  CHECK(varphi(0.0) == 1.0);
  CHECK(varphi(1.0) == 1.0);
  CHECK(kappa(1.0) == 1.0);
  CHECK(nu(0.0) == 0.0);
  CHECK(nu(1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(theta(0.0) == 0.0);
  CHECK(theta(1.0) == doctest::Approx(std::numbers::e));
  CHECK(std::isinf(log_nu(0.0)));
  CHECK(phi_closed(0.0) == 0.0);
  CHECK(phi_closed(1.0) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("softplus and the variance factor are stable in both directions") {
  CHECK(softplus(0.0) == doctest::Approx(std::log(2.0)));
  CHECK(softplus(-800.0) == doctest::Approx(800.0));
  CHECK(softplus(700.0) > 0.0);
  CHECK(softplus(800.0) == 0.0);  // e^{-800} underflows
  CHECK(std::isfinite(std::log(softplus(700.0))));
  for (const double y : {-30.0, -3.0, -0.5, 0.0, 0.5, 3.0, 8.0, 30.0, 200.0}) {
    const HP Y = y;
    const HP expect = 1 - exp(Y) * log1p(exp(-Y));
    CHECK(one_minus_exp_softplus(y) == doctest::Approx(d(expect)).epsilon(1e-12));
  }
}

TEST_CASE("saddle point anchors") {
  CHECK(std::abs(delta(kPoisson) + std::log(std::numbers::e - 1.0)) <= 1e-10);
  CHECK(std::abs(phi(kPoisson) - 1.0) <= 1e-10);
  CHECK(delta(0.5) == doctest::Approx(d(oracle::hp_delta(HP(0.5)))).epsilon(1e-12));
}

TEST_CASE("saddle point inversion round trip on a 1000-point grid") {
  double worst = 0.0;
  for (int k = 1; k <= 1000; ++k) {
    const double x = k / 1001.0;
    worst = std::max(worst, std::abs(delta_inv(delta(x)) - x));
  }
  CHECK(worst <= 1e-12);
  // delta_inv(y) behaves like 1/|y| below and like 1 - e^{-y}/2 above.
  CHECK(delta_inv(-40.0) == doctest::Approx(1.0 / 40).epsilon(1e-12));
  CHECK(delta_inv(40.0) > 1.0 - 1e-12);
}

TEST_CASE("saddle-point functions against the 50-digit oracle") {
  for (const double x : {0.01, 0.1, 0.2, 0.5, 0.8, 0.9, 0.99}) {
    const HP X = x;
    CHECK(delta(x) == doctest::Approx(d(oracle::hp_delta(X))).epsilon(1e-11));
    CHECK(phi(x) == doctest::Approx(d(oracle::hp_phi(X))).epsilon(1e-11));
    CHECK(psi(x) == doctest::Approx(d(oracle::hp_psi(X))).epsilon(1e-11));
    CHECK(mu(x) == doctest::Approx(d(oracle::hp_mu(X))).epsilon(1e-10));
  }
}

TEST_CASE("limits of psi and mu at the ends of the open interval") {
  CHECK(psi(1e-6) < 1e-4);
  CHECK(psi(1.0 - 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(mu(1e-8) < 1e-3);
  CHECK(mu(1.0 - 1e-8) < 1e-3);
  CHECK(phi(1e-6) < 1e-4);
  CHECK(phi(1.0 - 1e-9) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
}

TEST_CASE("phi peaks at the Poisson point") {
  for (const double x : {0.3, 0.5, 0.6, 0.62, 0.64, 0.7, 0.9}) CHECK(phi(x) <= 1.0 + 1e-15);
  CHECK(phi(kPoisson - 1e-3) < 1.0);
  CHECK(phi(kPoisson + 1e-3) < 1.0);
}

TEST_CASE("nu crosses 1 exactly twice") {
  const UnitRoots r = nu_unit_roots();
  const auto g = [](const HP& x) { return oracle::hp_nu(x) - 1; };
  const double x0 = d(oracle::hp_bisect(g, HP(0.2), HP(0.5)));
  const double x1 = d(oracle::hp_bisect(g, HP(0.6), HP(0.95)));
  CHECK(r.x0 == doctest::Approx(x0).epsilon(1e-12));
  CHECK(r.x1 == doctest::Approx(x1).epsilon(1e-12));
  CHECK(r.x0 >= 0.386);
  CHECK(r.x0 <= 0.388);
  CHECK(r.x1 >= 0.789);
  CHECK(r.x1 <= 0.791);
  CHECK(nu(r.argmax) > 1.0);
  CHECK(r.x0 < r.argmax);
  CHECK(r.argmax < r.x1);
}

TEST_CASE("tail rate certificate") {
  const LambdaCertificate c = lambda_for(0.1, 0.9);
  CHECK(c.lambda0 == doctest::Approx(d(oracle::hp_nu(HP(0.1)))).epsilon(1e-14));
  CHECK(c.lambda1 == doctest::Approx(d(oracle::hp_nu(HP(0.9)))).epsilon(1e-14));
  CHECK(c.lambda == c.lambda1);
  CHECK(c.lambda0 >= 0.168);
  CHECK(c.lambda0 <= 0.178);
  CHECK(c.lambda >= 0.695);
  CHECK(c.lambda <= 0.705);
  CHECK_THROWS_AS(lambda_for(0.5, 0.9), std::domain_error);
  CHECK_THROWS_AS(lambda_for(0.1, 0.7), std::domain_error);
  CHECK_THROWS_AS(lambda_for(0.0, 0.9), std::domain_error);
  CHECK_THROWS_AS(lambda_for(0.1, 1.0), std::domain_error);
}

TEST_CASE("nu is concave away from 0 but convex near 0") {
  const double h = 1e-3;
  double worst = -1.0;
  for (double x = 0.26; x <= 0.999 - h / 2; x += h) worst = std::max(worst, second_difference(RealFunction::nu, x, h));
  CHECK(worst <= 1e-6);
  // Near the origin nu bends upward: its inflection point sits near 0.2529.
  CHECK(second_difference(RealFunction::nu, 0.1, h) > 0.0);
  CHECK(second_difference(RealFunction::nu, 0.2, h) > 0.0);
  const auto nu2 = [](const HP& x) {
    const HP step = HP(1) / 100000;
    return oracle::hp_nu(x + step) - 2 * oracle::hp_nu(x) + oracle::hp_nu(x - step);
  };
  const double inflection = d(oracle::hp_bisect(nu2, HP(0.2), HP(0.3), 60));
  CHECK(inflection == doctest::Approx(0.2529).epsilon(1e-3));
}

TEST_CASE("phi is concave above its inflection point and convex below it") {
  const double h = 1e-3;
  double x = 0.01;
  while (second_difference(RealFunction::phi, x, h) > 0.0) x += h;
  CHECK(x > 0.15);
  CHECK(x < 0.3);
  double worst = -1.0;
  for (double y = x; y <= 0.999 - h / 2; y += h) worst = std::max(worst, second_difference(RealFunction::phi, y, h));
  CHECK(worst <= 1e-6);
}

TEST_CASE("extremes of mu on the central interval") {
  const MuExtrema e = mu_extrema(0.1);
  CHECK(e.argmin == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(e.min == doctest::Approx(d(oracle::hp_mu(HP(0.9)))).epsilon(1e-12));
  // Ternary search on the oracle for the interior maximum.
  HP lo = 0.3, hi = 0.7;
  for (int i = 0; i < 70; ++i) {
    const HP a = lo + (hi - lo) / 3, b = hi - (hi - lo) / 3;
    if (oracle::hp_mu(a) < oracle::hp_mu(b)) {
      lo = a;
    } else {
      hi = b;
    }
  }
  CHECK(e.max == doctest::Approx(d(oracle::hp_mu((lo + hi) / 2))).epsilon(1e-12));
  const MuExtrema p = mu_extrema(0.1, Exec::parallel);
  CHECK(p.min == e.min);
  CHECK(p.max == e.max);
  CHECK_THROWS_AS(mu_extrema(0.5), std::domain_error);
}

TEST_CASE("grid sampling: serial and parallel agree bit for bit") {
  for (const RealFunction f : {RealFunction::nu, RealFunction::phi, RealFunction::mu, RealFunction::kappa}) {
    const FunctionGrid s = sample_uniform(f, 0.05, 0.95, 301, Exec::serial);
    const FunctionGrid p = sample_uniform(f, 0.05, 0.95, 301, Exec::parallel);
    CHECK(s.ys == p.ys);
    CHECK(s.xs == p.xs);
    CHECK(s.name == function_name(f));
  }
}

TEST_CASE("grid sampling validates its input") {
  const std::vector<double> bad_order{0.2, 0.1};
  CHECK_THROWS_AS(sample(RealFunction::nu, bad_order), std::invalid_argument);
  const std::vector<double> closed{0.0, 0.5};
  CHECK_THROWS_AS(sample(RealFunction::psi, closed, Exec::parallel), std::domain_error);
  CHECK_NOTHROW(sample(RealFunction::varphi, closed));
  const std::vector<double> outside{0.5, 1.5};
  CHECK_THROWS(sample(RealFunction::nu, outside));
}

TEST_CASE("function names round trip") {
  for (const RealFunction f : {RealFunction::varphi, RealFunction::gamma, RealFunction::theta, RealFunction::eta,
                               RealFunction::kappa, RealFunction::nu, RealFunction::delta, RealFunction::psi,
                               RealFunction::mu, RealFunction::phi}) {
    CHECK(function_from_name(function_name(f)) == f);
  }
  CHECK_THROWS_AS(function_from_name("zeta"), std::invalid_argument);
}
