#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "wordstat/bounds.hpp"
#include "wordstat/realfuncs.hpp"

using namespace wordstat;
using oracle::Big;
using oracle::HP;

namespace {

double d(const HP& v) { return static_cast<double>(v); }

HP hp_pi() { return boost::math::constants::pi<HP>(); }

}  // namespace

TEST_CASE("factorial sandwich against the oracle") {
  for (int n = 1; n <= 170; ++n) {
    const HP N = n;
    const HP base = sqrt(2 * hp_pi()) * pow(N, N + HP(0.5)) * exp(-N);
    const HP f = HP(factorial(n));
    CHECK(base <= f);
    CHECK(f <= base * exp(HP(1) / 12));
    CHECK(robbins_sandwich_check(n));
  }
}

TEST_CASE("binomial constants") {
  CHECK(binomial_lower_constant() == doctest::Approx(1.0 / (std::sqrt(2 * std::numbers::pi) * std::exp(1.0 / 6))));
  CHECK(binomial_upper_constant() == doctest::Approx(std::exp(1.0 / 12) / std::sqrt(2 * std::numbers::pi)));
  for (int n = 2; n <= 150; ++n) {
    for (int j = 1; j < n; ++j) REQUIRE(binomial_sandwich_check(n, j));
  }
}

TEST_CASE("trivial bound: exact j^n / j! and its theta form") {
  for (const auto [n, j] : {std::pair{5, 2}, {40, 17}, {100, 60}, {120, 1}, {120, 120}}) {
    const TrivialBound t = bound_trivial(n, j);
    const HP raw = pow(HP(j), n) / HP(factorial(j));
    CHECK(t.raw.log() == doctest::Approx(d(log(raw))).epsilon(1e-13));
    const HP x = HP(j) / n;
    const HP form = pow(pow(HP(n), 1 - x) * pow(x, 1 - x) * exp(x), n) / sqrt(2 * hp_pi() * j);
    CHECK(t.theta_form.log() == doctest::Approx(d(log(form))).epsilon(1e-12));
    CHECK(t.theta_lower.log() <= t.raw.log());
    CHECK(t.raw.log() <= t.theta_form.log());
    CHECK(bound_trivial_log(n, j).log() == t.theta_form.log());
  }
}

TEST_CASE("Rennie bound is an equality at j = n - 1") {
  for (int n = 2; n <= 60; ++n) {
    const RennieBound r = bound_rennie(n, n - 1);
    // S(n, n-1) = C(n, 2) = C(n, n-1) (n-1) / 2
    CHECK(r.bound.log() == doctest::Approx(log_big(binomial(n, 2))).epsilon(1e-14));
    CHECK(r.eta_lower.log() <= r.product.log() + 1e-12);
    CHECK(r.product.log() <= r.eta_upper.log() + 1e-12);
  }
  CHECK_THROWS_AS(bound_rennie(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(bound_rennie(1, 1), std::invalid_argument);
}

TEST_CASE("correction-factor internals against exact ratios") {
  for (const auto [n, j] : {std::pair{3, 1}, {10, 4}, {50, 20}, {100, 1}, {100, 98}}) {
    const AdsInternals a = ads_internals(n, j);
    const int m = n - j;
    const Big big_n = binomial(n, 2);
    CHECK(a.big_n == big_n);
    const HP mu5 = HP(binomial(m, 2)) * HP(binomial(n, 3)) / HP(binomial(big_n, 2));
    CHECK(a.mu5 == doctest::Approx(d(mu5)).epsilon(1e-13));
    // closed form of the same quantity
    CHECK(a.mu5 == doctest::Approx(2.0 / 3.0 * m * (m - 1) / (n + 1.0)).epsilon(1e-13));
    const HP mu6 = HP(binomial(m, 2)) * n * (n - 1) * (4 * n - 5) / (6 * HP(big_n) * HP(big_n));
    CHECK(a.mu6 == doctest::Approx(d(mu6)).epsilon(1e-13));
    CHECK(a.q <= 0.5);
    CHECK(a.cap_d5 <= 1.0);
    CHECK(a.cap_d6 <= 1.0);
    CHECK(a.cap_d5 <= a.d5);
    CHECK(a.cap_d6 <= 2 * a.mu6 * a.d6 + 1e-15);
  }
  CHECK_THROWS_AS(ads_internals(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(ads_internals(10, 9), std::invalid_argument);
}

TEST_CASE("correction-factor sandwiches and kappa brackets") {
  for (int n = 3; n <= 60; ++n) {
    for (int j = 1; j <= n - 2; ++j) {
      REQUIRE(lemma4_sandwich_check(n, j));
      REQUIRE(ads_kappa_sandwich_check(n, j));
    }
  }
  const auto checks = lemma4_checks(20, 7);
  CHECK(checks.size() == 6);
  CHECK(ads_kappa_checks(20, 7).size() == 8);
}

TEST_CASE("A5 and A6 against the oracle") {
  for (const auto [n, j] : {std::pair{10, 4}, {60, 30}}) {
    const AdsInternals a = ads_internals(n, j);
    const HP main5 = HP(binomial(a.big_n, n - j));
    const HP a5 = main5 * (exp(-2 * HP(a.mu5)) + a.cap_d5);
    CHECK(bound_A5_log(n, j).log() == doctest::Approx(d(log(a5))).epsilon(1e-13));
    const HP main6 = pow(HP(a.big_n), n - j) / HP(factorial(n - j));
    const HP a6 = main6 * (exp(-HP(a.mu6)) + a.cap_d6);
    CHECK(bound_A6_log(n, j).log() == doctest::Approx(d(log(a6))).epsilon(1e-13));
  }
}

TEST_CASE("saddle-point estimate against an oracle evaluation") {
  const int n = 100, j = 50;
  const HP x = HP(j) / n;
  const HP alpha = oracle::hp_delta(x);
  const HP rho = log(1 + exp(-alpha));
  const HP t = HP(factorial(n)) / HP(factorial(j)) * exp(-alpha * j) /
               (pow(rho, n) * sqrt(1 - exp(alpha) * rho) * sqrt(2 * hp_pi() * n));
  const HP s = HP(stirling2_alternating(n, j));
  const BenderEstimate b = bender_estimate(n, j);
  CHECK(std::exp(log_big(stirling2_alternating(n, j)) - b.t_alpha.log()) == doctest::Approx(d(s / t)).epsilon(1e-10));
  CHECK(d(s / t) == doctest::Approx(0.99784397671490030).epsilon(1e-9));
  const HP center = pow(pow(HP(n), 1 - x) * oracle::hp_psi(x), n) / (sqrt(2 * hp_pi() * n) * oracle::hp_mu(x));
  CHECK(b.center.log() == doctest::Approx(d(log(center))).epsilon(1e-11));
  CHECK(b.band_low(1.1).log() == doctest::Approx(b.center.log() - 1.0 / 12 - std::log(1.1)));
  CHECK(b.band_high(1.1).log() == doctest::Approx(b.center.log() + 1.0 / 12 + std::log(1.1)));
  CHECK(bender_T_log(n, j).log() == b.t_alpha.log());
  CHECK_THROWS_AS(bender_estimate(10, 10), std::invalid_argument);
}

TEST_CASE("the variance identity behind the center form holds") {
  for (int k = 1; k < 100; ++k) CHECK(std::abs(bender_identity_residual(k / 100.0)) < 1e-12);
}

TEST_CASE("report at an interior point carries every bound family") {
  const BoundReport r = bound_report(100, 60);
  CHECK(r.bound_count() == 4);
  CHECK(r.all_pass());
  CHECK(r.trivial_raw_log.has_value());
  CHECK(r.bender_low.has_value());
  CHECK(r.bender_low->log() <= r.exact_log_S.log());
  CHECK(r.exact_log_S.log() <= r.bender_high->log());
}

TEST_CASE("reports near the edges") {
  SUBCASE("j = 1: the trivial bound is exact") {
    const BoundReport r = bound_report(100, 1);
    CHECK(r.trivial_raw_log->log() == doctest::Approx(0.0));
    CHECK(r.trivial_raw_log->log() < r.rennie_log->log());
    CHECK(r.trivial_raw_log->log() < r.a5_log->log());
  }
  SUBCASE("j = n - 1: Rennie is the tightest bound") {
    const BoundReport r = bound_report(100, 99);
    CHECK(r.rennie_log->log() == doctest::Approx(r.exact_log_S.log()).epsilon(1e-14));
    CHECK(r.rennie_log->log() < r.trivial_log->log());
    CHECK(r.rennie_log->log() < r.trivial_raw_log->log());
    CHECK_FALSE(r.a5_log.has_value());
    CHECK(r.bound_count() == 3);
  }
  SUBCASE("j = n: only the trivial bound applies") {
    const BoundReport r = bound_report(100, 100);
    CHECK(r.bound_count() == 1);
    CHECK(r.all_pass());
  }
  SUBCASE("table overload matches") {
    const StirlingTable t(50);
    const BoundReport a = bound_report(t, 50, 20);
    const BoundReport b = bound_report(50, 20);
    CHECK(a.exact_log_S.log() == b.exact_log_S.log());
    CHECK(a.a6_log->log() == b.a6_log->log());
  }
}

TEST_CASE("normalized scale") {
  const TrivialBound t = bound_trivial(100, 40);
  const double expect = std::exp((t.theta_form.log() - 60 * std::log(100.0)) / 100);
  CHECK(normalized_root(t.theta_form, 100, 40) == doctest::Approx(expect));
  // The theta form in the normalized scale is theta(x) / (2 pi j)^{1/(2n)}.
  CHECK(normalized_root(t.theta_form, 100, 40) ==
        doctest::Approx(theta(0.4) / std::pow(2 * std::numbers::pi * 40, 1.0 / 200)).epsilon(1e-12));
}

TEST_CASE("property: random (n, j) pairs satisfy every applicable bound") {
  std::mt19937_64 rng(2024);
  const StirlingTable table(180);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 178);
    const int j = 1 + static_cast<int>(rng() % n);
    const BoundReport r = bound_report(table, n, j);
    INFO("n=" << n << " j=" << j);
    CHECK(r.all_pass());
    CHECK(r.exact_log_S.log() <= r.trivial_raw_log->log() + kVerdictSlack);
    if (r.rennie_log) CHECK(r.exact_log_S.log() <= r.rennie_log->log() + kVerdictSlack);
    if (r.a5_log) CHECK(r.exact_log_S.log() <= r.a5_log->log() + kVerdictSlack);
    if (r.a6_log) CHECK(r.exact_log_S.log() <= r.a6_log->log() + kVerdictSlack);
  }
}
