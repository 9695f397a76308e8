#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "wordstat/bigcomb.hpp"
#include "wordstat/log_value.hpp"

using namespace wordstat;

TEST_CASE("factorial, binomial and power agree with Pascal's triangle") {
  const auto rows = oracle::pascal(60);
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == rows[n][k]);
    CHECK(binomial(n, -1) == 0);
    CHECK(binomial(n, n + 1) == 0);
  }
  CHECK(binomial(BigInt(1770), 58) == binomial(1770, 58));
  oracle::Big f = 1;
  for (int n = 1; n <= 50; ++n) {
    f *= n;
    CHECK(factorial(n) == f);
  }
  CHECK(factorial(0) == 1);
  CHECK(power(7, 0) == 1);
  CHECK(power(3, 5) == 243);
}

TEST_CASE("Stirling numbers match brute-force set partitions") {
  for (int n = 1; n <= 10; ++n) {
    const auto counts = oracle::partitions_by_blocks(n);
    const std::vector<BigInt> row = stirling2_row(n);
    for (int j = 1; j <= n; ++j) {
      CHECK(row[j] == counts[j]);
      CHECK(stirling2_alternating(n, j) == counts[j]);
    }
    CHECK(row[0] == 0);
  }
}

TEST_CASE("known small Stirling values") {
  CHECK(stirling2_alternating(3, 2) == 3);
  CHECK(stirling2_alternating(4, 2) == 7);
  CHECK(stirling2_alternating(5, 3) == 25);
  CHECK(stirling2_alternating(10, 5) == 42525);
  CHECK(surjections(3, 2) == 6);
  CHECK(surjections(4, 4) == 24);
}

TEST_CASE("inclusion-exclusion and recurrence agree exactly up to n = 80") {
  const StirlingTable table(80);
  for (int n = 1; n <= 80; ++n) {
    for (int j = 1; j <= n; ++j) REQUIRE(stirling2_alternating(n, j) == table.at(n, j));
  }
}

TEST_CASE("word counts match enumeration of all words") {
  for (int n = 1; n <= 6; ++n) {
    const auto counts = oracle::words_by_distinct(n);
    for (int j = 1; j <= n; ++j) CHECK(word_count(n, j) == counts[j]);
  }
  CHECK(word_count(3, 1) == 3);
  CHECK(word_count(3, 2) == 18);
  CHECK(word_count(3, 3) == 6);
  CHECK(word_count(1, 1) == 1);
}

TEST_CASE("word counts over j sum to n^n") {
  const StirlingTable table(120);
  for (int n = 1; n <= 120; ++n) CHECK(word_count_total_check(table, n));
  CHECK(word_count_total_check(4));
  CHECK(word_count_total_check(57, Exec::parallel));
}

TEST_CASE("table rows and streamed rows coincide, serial and parallel") {
  const StirlingTable serial(90, Exec::serial);
  const StirlingTable parallel(90, Exec::parallel);
  for (const int n : {1, 2, 17, 64, 90}) {
    const std::vector<BigInt> s = stirling2_row(n, Exec::serial);
    const std::vector<BigInt> p = stirling2_row(n, Exec::parallel);
    CHECK(s == p);
    for (int j = 0; j <= n; ++j) {
      CHECK(serial.at(n, j) == s[j]);
      CHECK(parallel.at(n, j) == s[j]);
    }
    CHECK(serial.word_counts(n) == parallel.word_counts(n));
  }
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(stirling2_alternating(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(stirling2_alternating(5, 6), std::invalid_argument);
  CHECK_THROWS_AS(word_count(3, 4), std::invalid_argument);
  const StirlingTable t(5);
  CHECK_THROWS_AS(t.at(6, 1), std::out_of_range);
  CHECK_THROWS_AS(t.at(5, 6), std::out_of_range);
  CHECK_THROWS_AS(t.at(-1, 0), std::out_of_range);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.word_count(5, 0) == 0);
}

TEST_CASE("big-integer logs agree with a 50-digit oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int bits = 1 + static_cast<int>(rng() % 3000);
    BigInt v = 1;
    v <<= bits - 1;
    BigInt noise = 0;
    for (int w = 0; w * 64 < bits; ++w) noise = (noise << 64) | BigInt(rng());
    v |= noise & ((BigInt(1) << (bits - 1)) - 1);
    const double expect = static_cast<double>(log(oracle::HP(v)));
    CHECK(log_big(v) == doctest::Approx(expect).epsilon(1e-15));
  }
  CHECK(log_big(BigInt(1)) == 0.0);
  CHECK(std::isinf(log_big(BigInt(0))));
}

TEST_CASE("log ratios keep precision when both sides are huge") {
  for (const int n : {50, 120, 200}) {
    const BigInt nn = power(n, n);
    for (const int j : {1, n / 3, n / 2, n - 1, n}) {
      const BigInt a = word_count(n, j);
      const double expect = static_cast<double>(oracle::hp_log_ratio(a, nn));
      CHECK(normalized_log_a(n, j) == doctest::Approx(expect).epsilon(1e-14));
    }
  }
  // 2^5000 / (2^5000 + 1) is 1 to double precision; the result must not be nan or inf.
  const BigInt big = BigInt(1) << 5000;
  CHECK(std::abs(log_ratio(big, big + 1)) < 1e-15);
}

TEST_CASE("normalizations at simple points") {
  CHECK(nth_root_normalized_a(1, 1) == doctest::Approx(1.0));
  // a(3, 2) / 27 = 18 / 27
  CHECK(normalized_log_a(3, 2) == doctest::Approx(std::log(18.0 / 27.0)));
  // S(n, n) = 1 and n^{n-n} = 1
  CHECK(nth_root_normalized_S(100, 100) == doctest::Approx(1.0));
  const StirlingTable t(200);
  // a(200, 200) = 200!
  const double expect = std::exp(static_cast<double>(oracle::hp_log_ratio(factorial(200), power(200, 200))) / 200);
  CHECK(std::exp(normalized_log_a(t, 200, 200) / 200) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("exact_count bundles the same numbers") {
  const ExactCount c = exact_count(7, 3);
  CHECK(c.stirling == 301);
  CHECK(c.word_count == 63210);
}

TEST_CASE("LogValue arithmetic") {
  const LogValue a = LogValue::from_double(3.0);
  const LogValue b = LogValue::from_double(5.0);
  CHECK((a + b).value() == doctest::Approx(8.0));
  CHECK((a * b).value() == doctest::Approx(15.0));
  CHECK((b / a).value() == doctest::Approx(5.0 / 3.0));
  CHECK((a + LogValue::zero()).value() == doctest::Approx(3.0));
  CHECK(LogValue::zero().is_zero());
  CHECK(a < b);
  CHECK(LogValue::from_big(power(10, 400)).log() == doctest::Approx(400 * std::log(10.0)));
  CHECK(b.root(2).value() == doctest::Approx(std::sqrt(5.0)));
  CHECK_THROWS(LogValue::from_double(-1.0));
}
