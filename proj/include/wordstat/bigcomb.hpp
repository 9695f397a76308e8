#ifndef WORDSTAT_BIGCOMB_HPP
#define WORDSTAT_BIGCOMB_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

#include "wordstat/exec.hpp"

namespace wordstat {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

/// Exact C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Exact C(n, k) for a big upper argument (needed for C(C(n,2), n-j)).
BigInt binomial(const BigInt& n, int k);

BigInt power(int base, int exponent);

/// Natural log of a nonnegative big integer from its bit length and top 64
/// bits. Returns -inf for zero.
double log_big(const BigInt& v);

/// ln(num / den) for positive integers, with the binary exponents subtracted
/// before any floating point rounding.
double log_ratio(const BigInt& num, const BigInt& den);

/// S(n, j) through the inclusion-exclusion sum
///   S(n, j) = (1/j!) sum_{i=0}^{j} (-1)^i C(j, i) (j - i)^n.
/// The sum is accumulated exactly and divided by j! at the end.
/// Requires 1 <= j <= n.
BigInt stirling2_alternating(int n, int j);

/// Number of surjections from an n-set onto a j-set: j! S(n, j).
BigInt surjections(int n, int j);

/// Row n of the Stirling triangle, S(n, 0..n), built by the recurrence
/// while keeping only two rows alive.
std::vector<BigInt> stirling2_row(int n, Exec exec = Exec::serial);

/// Full triangle S(n, j) for 0 <= j <= n <= n_max via
/// S(n, j) = j S(n-1, j) + S(n-1, j-1). Read-only once built.
class StirlingTable {
 public:
  explicit StirlingTable(int n_max, Exec exec = Exec::serial);

  int n_max() const { return n_max_; }
  const BigInt& at(int n, int j) const;

  /// a(n, j) = C(n, j) j! S(n, j) = n!/(n-j)! S(n, j); zero for j = 0, n >= 1.
  BigInt word_count(int n, int j) const;
  std::vector<BigInt> word_counts(int n) const;

 private:
  static std::size_t index(int n, int j) {
    return static_cast<std::size_t>(n) * (n + 1) / 2 + j;
  }

  int n_max_;
  std::vector<BigInt> cells_;
};

/// Words of length n over an n-letter alphabet with exactly j distinct
/// letters. Requires 1 <= j <= n.
BigInt word_count(int n, int j);

/// sum_{j=1}^{n} a(n, j) == n^n, exactly.
bool word_count_total_check(int n, Exec exec = Exec::serial);
bool word_count_total_check(const StirlingTable& table, int n);

struct ExactCount {
  int n = 0;
  int j = 0;
  BigInt stirling;
  BigInt word_count;
};

ExactCount exact_count(int n, int j);

/// ln a(n, j) - n ln n.
double normalized_log_a(int n, int j);
double normalized_log_a(const StirlingTable& table, int n, int j);

/// (a(n, j) n^{-n})^{1/n}.
double nth_root_normalized_a(int n, int j);

/// (S(n, j) / n^{n-j})^{1/n}. Throws when S(n, j) = 0.
double nth_root_normalized_S(int n, int j);
double nth_root_normalized_S(const StirlingTable& table, int n, int j);

}  // namespace wordstat

#endif  // WORDSTAT_BIGCOMB_HPP
