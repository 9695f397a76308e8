#ifndef WORDSTAT_VERIFIER_HPP
#define WORDSTAT_VERIFIER_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordstat/bigcomb.hpp"
#include "wordstat/exec.hpp"

namespace wordstat {

/// A failed inequality lhs <= rhs. Bound suites report natural logs; the
/// correction-factor checks report the factors themselves.
struct Violation {
  std::string suite;
  int n = 0;
  int j = 0;
  double lhs = 0;
  double rhs = 0;
};

struct SuiteResult {
  long checked = 0;
  std::vector<Violation> violations;
};

/// Cutoffs for the tail regime [0, r0] u [r1, 1] and the central regime
/// [r, 1 - r], with the tail rate lambda = max(nu(r0), nu(r1)).
struct TheoremConfig {
  double r0 = 0.1;
  double r1 = 0.9;
  double r = 0.1;
  double lambda0 = 0;
  double lambda1 = 0;
  double lambda = 0;

  /// Validates 0 < r0 < x0, x1 < r1 < 1 and 0 < r < 1/2. When r is omitted
  /// it defaults to min(r0, 1 - r1), the largest value that leaves no gap
  /// between the tail and central regimes.
  static TheoremConfig make(double r0, double r1, std::optional<double> r = std::nullopt);
};

/// True when every j/n, 1 <= j <= n <= n_max, lies in a tail or in [r, 1 - r].
bool theorem1_coverage(const TheoremConfig& config, int n_max);

/// j/n in [lo, hi], tolerant to rounding in lo * n.
bool ratio_in(int n, int j, double lo, double hi);

/// a(n, j) n^{-n} <= sqrt(j) nu(j/n)^n for 1 <= j <= n-1, 2 <= n <= n_max.
SuiteResult verify_lemma10(const StirlingTable& table, int n_max, Exec exec = Exec::serial);

/// n^{-n} a(n, j) <= c sqrt(n) lambda^n for every tail pair 1 <= j <= n,
/// n_min <= n <= n_max. With c = 1 this is the bound without a constant.
SuiteResult verify_theorem1_tails(const TheoremConfig& config, const StirlingTable& table,
                                  int n_max, double c = 1.0, int n_min = 2,
                                  Exec exec = Exec::serial);

struct FittedConstants {
  double c_fit = 0;  ///< min of sqrt(n) a n^{-n} / phi^n
  double C_fit = 0;  ///< max of a n^{-n} / phi^n
  int n_lo = 0;
  int n_hi = 0;
  double r = 0;
  int c_at_n = 0, c_at_j = 0;
  int C_at_n = 0, C_at_j = 0;
};

struct CenterResult {
  FittedConstants fitted;
  double c1 = 0;  ///< 1 / max mu on [r, 1 - r]
  double C1 = 0;  ///< 1 / min mu on [r, 1 - r]
  long checked = 0;
  std::vector<Violation> violations;  ///< pointwise central sandwich failures
};

/// Fits the central constants over n_list and checks, pointwise,
///   e^{-1/6} c1 / sqrt(2 pi (n-j)) phi^n <= n^{-n} a <= e^{1/6} C1 / sqrt(2 pi (n-j)) phi^n.
CenterResult verify_theorem1_center(double r, std::span<const int> n_list,
                                    const StirlingTable& table, Exec exec = Exec::serial);

struct TailSummary {
  int n = 0;
  double epsilon = 0;
  int ell_low = 0;   ///< floor((1 - 1/e - eps) n)
  int ell_high = 0;  ///< ceil((1 - 1/e + eps) n)
  bool lower_empty = false;
  bool upper_empty = false;
  double log_lower_tail = 0;  ///< ln of n^{-n} sum_{j=1}^{ell_low} a(n, j)
  double log_upper_tail = 0;  ///< ln of n^{-n} sum_{j=ell_high}^{n} a(n, j)
  double rate_low = 0;
  double rate_high = 0;
  double log_lower_max = 0;  ///< largest single normalized term in each tail
  double log_upper_max = 0;
  bool bracket_holds = true;  ///< max <= sum <= n max, exact, both tails
};

TailSummary tail_sum(const StirlingTable& table, int n, double epsilon);
TailSummary tail_sum(int n, double epsilon);

struct DecayReport {
  double epsilon = 0;
  std::vector<TailSummary> summaries;
  bool masses_below_one = true;
  bool rates_negative = true;
  bool non_increasing = true;
  bool brackets_hold = true;
  /// (tail(n_last) / tail(n_prev))^{1 / (n_last - n_prev)} for the combined
  /// and the per-side tail masses.
  double lambda_fit = 0;
  double lambda_fit_low = 0;
  double lambda_fit_high = 0;
  bool ok() const {
    return masses_below_one && rates_negative && non_increasing && brackets_hold && lambda_fit < 1;
  }
};

DecayReport decay_rate_check(double epsilon, std::span<const int> n_list, const StirlingTable& table);

/// argmax_j a(n, j).
int mode_location(const StirlingTable& table, int n);

struct RootDeviation {
  double max_abs = 0;
  int at_j = 0;
};

/// max over j/n in [lo, hi] of |(a(n, j) n^{-n})^{1/n} - phi(j/n)|.
RootDeviation nth_root_deviation(const StirlingTable& table, int n, double lo, double hi);

struct BenderBand {
  int n = 0;
  double r = 0;
  double c = 0;
  long checked = 0;
  double max_log_ratio_center = 0;  ///< max |ln S - ln center| over the range
  double max_log_ratio_t = 0;       ///< max |ln S - ln T_alpha|
  std::vector<Violation> violations;
};

/// Exact S inside the band center e^{+-1/12} C^{+-1} for j/n in [r, 1 - r].
BenderBand verify_bender_band(const StirlingTable& table, int n, double r, double c);

// Sweeps over the bound families. Each returns the violations in (n, j)
// order, independent of the execution policy.

/// Trivial (raw and theta form), Rennie, A5 and A6 upper bounds.
SuiteResult verify_bound_soundness(const StirlingTable& table, int n_min, int n_max,
                                   Exec exec = Exec::serial);
SuiteResult verify_lemma4(int n_max, Exec exec = Exec::serial);
SuiteResult verify_ads_kappa(int n_max, Exec exec = Exec::serial);
/// Factorial sandwich for 1..n_max and the binomial chain for 2..n_max.
SuiteResult verify_binomial_sandwiches(int n_max, Exec exec = Exec::serial);

struct VerificationReport {
  TheoremConfig config;
  int n_max = 0;
  double epsilon = 0;
  std::optional<CenterResult> center;
  std::optional<DecayReport> decay;
  std::map<std::string, SuiteResult> suites;

  std::size_t violation_count() const;
};

struct VerifyOptions {
  TheoremConfig config = TheoremConfig::make(0.1, 0.9);
  int n_max = 100;
  double epsilon = 0.15;
  std::vector<std::string> suites;  ///< empty = all
  Exec exec = Exec::parallel;
};

/// Names accepted in VerifyOptions::suites.
const std::vector<std::string>& verify_suite_names();

VerificationReport run_verification(const VerifyOptions& options);

}  // namespace wordstat

#endif  // WORDSTAT_VERIFIER_HPP
