#include "wordstat/bigcomb.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace wordstat {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void require_row_index(int n, int j, const char* what) {
  if (n < 1 || j < 1 || j > n) {
    throw std::invalid_argument(std::string(what) + ": need 1 <= j <= n, got n=" +
                                std::to_string(n) + " j=" + std::to_string(j));
  }
}

// Top 64 bits of v as a double plus the number of bits shifted out.
struct Mantissa {
  double top;
  long shift;
};

Mantissa split(const BigInt& v) {
  const long bits = static_cast<long>(boost::multiprecision::msb(v)) + 1;
  if (bits <= 64) return {static_cast<double>(v.convert_to<std::uint64_t>()), 0};
  const long shift = bits - 64;
  const BigInt top = v >> static_cast<unsigned>(shift);
  return {static_cast<double>(top.convert_to<std::uint64_t>()), shift};
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  return binomial(BigInt(n), k);
}

BigInt binomial(const BigInt& n, int k) {
  if (k < 0 || n < k) return 0;
  BigInt kk = k;
  if (2 * kk > n) kk = n - kk;
  const int steps = kk.convert_to<int>();
  BigInt r = 1;
  for (int i = 1; i <= steps; ++i) {
    r *= n - steps + i;
    r /= i;  // r is C(n - steps + i, i) here, so the division is exact
  }
  return r;
}

BigInt power(int base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("power: negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

double log_big(const BigInt& v) {
  if (v < 0) throw std::domain_error("log_big: negative value");
  if (v == 0) return -std::numeric_limits<double>::infinity();
  const Mantissa m = split(v);
  return std::log(m.top) + static_cast<double>(m.shift) * kLn2;
}

double log_ratio(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw std::domain_error("log_ratio: nonpositive denominator");
  if (num < 0) throw std::domain_error("log_ratio: negative numerator");
  if (num == 0) return -std::numeric_limits<double>::infinity();
  const Mantissa a = split(num);
  const Mantissa b = split(den);
  return (std::log(a.top) - std::log(b.top)) + static_cast<double>(a.shift - b.shift) * kLn2;
}

BigInt surjections(int n, int j) {
  require_row_index(n, j, "surjections");
  BigInt sum = 0;
  BigInt choose = 1;  // C(j, i)
  for (int i = 0; i <= j; ++i) {
    const BigInt term = choose * power(j - i, n);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    choose *= j - i;
    choose /= i + 1;
  }
  return sum;
}

BigInt stirling2_alternating(int n, int j) {
  require_row_index(n, j, "stirling2_alternating");
  const BigInt total = surjections(n, j);
  const BigInt jf = factorial(j);
  BigInt q;
  BigInt rem;
  boost::multiprecision::divide_qr(total, jf, q, rem);
  if (rem != 0) throw std::logic_error("stirling2_alternating: inexact division by j!");
  return q;
}

std::vector<BigInt> stirling2_row(int n, Exec exec) {
  if (n < 0) throw std::invalid_argument("stirling2_row: negative n");
  std::vector<BigInt> prev(static_cast<std::size_t>(n) + 1);
  std::vector<BigInt> cur(static_cast<std::size_t>(n) + 1);
  prev[0] = 1;
  const bool par = exec == Exec::parallel;
  for (int m = 1; m <= n; ++m) {
    cur[0] = 0;
#pragma omp parallel for schedule(static) if (par)
    for (int j = 1; j <= m; ++j) {
      cur[j] = j * prev[j] + prev[j - 1];  // prev[m] is still zero here
    }
    std::swap(prev, cur);
  }
  return prev;
}

StirlingTable::StirlingTable(int n_max, Exec exec) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("StirlingTable: negative n_max");
  cells_.resize(index(n_max, n_max) + 1);
  cells_[0] = 1;
  const bool par = exec == Exec::parallel;
  for (int n = 1; n <= n_max; ++n) {
    cells_[index(n, 0)] = 0;
#pragma omp parallel for schedule(static) if (par)
    for (int j = 1; j <= n; ++j) {
      BigInt v = cells_[index(n - 1, j - 1)];
      if (j < n) v += j * cells_[index(n - 1, j)];
      cells_[index(n, j)] = std::move(v);
    }
  }
}

const BigInt& StirlingTable::at(int n, int j) const {
  if (n < 0 || n > n_max_ || j < 0 || j > n) {
    throw std::out_of_range("StirlingTable::at: (" + std::to_string(n) + ", " +
                            std::to_string(j) + ") outside table of size " +
                            std::to_string(n_max_));
  }
  return cells_[index(n, j)];
}

BigInt StirlingTable::word_count(int n, int j) const {
  const BigInt& s = at(n, j);
  BigInt falling = 1;
  for (int i = 0; i < j; ++i) falling *= n - i;
  return falling * s;
}

std::vector<BigInt> StirlingTable::word_counts(int n) const {
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  BigInt falling = 1;
  for (int j = 0; j <= n; ++j) {
    out[j] = falling * at(n, j);
    falling *= n - j;
  }
  return out;
}

BigInt word_count(int n, int j) {
  require_row_index(n, j, "word_count");
  return binomial(n, j) * surjections(n, j);
}

bool word_count_total_check(int n, Exec exec) {
  if (n < 1) throw std::invalid_argument("word_count_total_check: need n >= 1");
  const std::vector<BigInt> row = stirling2_row(n, exec);
  BigInt sum = 0;
  BigInt falling = 1;
  for (int j = 0; j <= n; ++j) {
    sum += falling * row[j];
    falling *= n - j;
  }
  return sum == power(n, n);
}

bool word_count_total_check(const StirlingTable& table, int n) {
  if (n < 1) throw std::invalid_argument("word_count_total_check: need n >= 1");
  BigInt sum = 0;
  for (const BigInt& a : table.word_counts(n)) sum += a;
  return sum == power(n, n);
}

ExactCount exact_count(int n, int j) {
  require_row_index(n, j, "exact_count");
  ExactCount e;
  e.n = n;
  e.j = j;
  e.stirling = stirling2_alternating(n, j);
  e.word_count = binomial(n, j) * factorial(j) * e.stirling;
  return e;
}

double normalized_log_a(int n, int j) {
  require_row_index(n, j, "normalized_log_a");
  return log_ratio(word_count(n, j), power(n, n));
}

double normalized_log_a(const StirlingTable& table, int n, int j) {
  require_row_index(n, j, "normalized_log_a");
  return log_ratio(table.word_count(n, j), power(n, n));
}

double nth_root_normalized_a(int n, int j) {
  return std::exp(normalized_log_a(n, j) / n);
}

double nth_root_normalized_S(int n, int j) {
  require_row_index(n, j, "nth_root_normalized_S");
  return std::exp(log_ratio(stirling2_alternating(n, j), power(n, n - j)) / n);
}

double nth_root_normalized_S(const StirlingTable& table, int n, int j) {
  require_row_index(n, j, "nth_root_normalized_S");
  return std::exp(log_ratio(table.at(n, j), power(n, n - j)) / n);
}

}  // namespace wordstat
