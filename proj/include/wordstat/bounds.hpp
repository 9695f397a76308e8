#ifndef WORDSTAT_BOUNDS_HPP
#define WORDSTAT_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wordstat/bigcomb.hpp"
#include "wordstat/log_value.hpp"

namespace wordstat {

/// Log-domain slack for every upper-bound verdict. Covers the big-integer to
/// double conversion error with several orders of margin.
inline constexpr double kVerdictSlack = 1e-9;

// Factorial and binomial sandwiches --------------------------------------

/// sqrt(2 pi) n^{n+1/2} e^{-n} <= n! <= sqrt(2 pi) e^{1/12} n^{n+1/2} e^{-n}
bool robbins_sandwich_check(int n);

/// (1/(2 sqrt n)) varphi^n <= (2 c0/sqrt n) varphi^n <= C(n, j)
///   <= sqrt(2) C0 varphi^n <= varphi^n, with varphi = varphi(j/n).
/// Requires n >= 2, 1 <= j <= n-1.
bool binomial_sandwich_check(int n, int j);

double binomial_lower_constant();  ///< c0 = (sqrt(2 pi) e^{1/6})^{-1}
double binomial_upper_constant();  ///< C0 = e^{1/12} / sqrt(2 pi)

// Trivial bound S(n, j) <= j^n / j! ----------------------------------------

struct TrivialBound {
  LogValue raw;          ///< exact j^n / j!
  LogValue theta_form;   ///< (2 pi j)^{-1/2} (n^{1-j/n} theta(j/n))^n
  LogValue theta_lower;  ///< theta_form scaled by e^{-1/12}; a lower bound on raw
};

TrivialBound bound_trivial(int n, int j);
LogValue bound_trivial_log(int n, int j);

// Rennie-Dobson S(n, j) <= C(n, j) j^{n-j} / 2 ------------------------------

struct RennieBound {
  LogValue bound;      ///< C(n, j) j^{n-j} / 2
  LogValue product;    ///< C(n, j) j^{n-j}, exact
  LogValue eta_upper;  ///< (n^{1-j/n} eta(j/n))^n
  LogValue eta_lower;  ///< eta_upper / (2 sqrt n)
};

/// Requires 1 <= j <= n-1.
RennieBound bound_rennie(int n, int j);
LogValue bound_rennie_log(int n, int j);

// Arratia-DeSalvo ------------------------------------------------------------

struct AdsInternals {
  int n = 0;
  int j = 0;
  BigInt big_n;  ///< N = C(n, 2)
  double mu5 = 0, mu6 = 0;
  double p = 0, q = 0, rr = 0, s = 0, t = 0;  ///< parts of d5
  double u = 0, v = 0, w = 0, z = 0;          ///< parts of d6
  double d5 = 0, d6 = 0;
  double cap_d5 = 0, cap_d6 = 0;  ///< min(d, 2 mu d, 1)
};

/// Requires n >= 3, 1 <= j <= n-2.
AdsInternals ads_internals(int n, int j);

/// e^{-m}(1 + e^{m} D), evaluated as e^{-m} + D.
double ads_factor(double m, double cap_d);

/// C(N, n-j) e^{-2 mu5} (1 + e^{2 mu5} D5)
LogValue bound_A5_log(int n, int j);
/// N^{n-j}/(n-j)! e^{-mu6} (1 + e^{mu6} D6)
LogValue bound_A6_log(int n, int j);

/// One inequality of the kappa-form sandwiches, in logs: lhs <= rhs.
struct InequalityCheck {
  std::string name;
  double lhs;
  double rhs;
  bool holds;
};

/// 1/(2n^2) <= e^{-mu}(1 + e^{mu} D) <= 2 for (mu5, D5) and (mu6, D6),
/// plus the same for the factor A5 actually uses (2 mu5, D5).
std::vector<InequalityCheck> lemma4_checks(int n, int j, double slack = 1e-12);
bool lemma4_sandwich_check(int n, int j, double slack = 1e-12);

/// Both sides of the kappa brackets for C(N, n-j), N^{n-j}/(n-j)!, A5 and A6.
std::vector<InequalityCheck> ads_kappa_checks(int n, int j, double slack = kVerdictSlack);
bool ads_kappa_sandwich_check(int n, int j);

// Saddle-point estimate --------------------------------------------------------

struct BenderEstimate {
  int n = 0;
  int j = 0;
  double alpha = 0;  ///< delta(j/n)
  double rho = 0;    ///< ln(1 + e^{-alpha})
  LogValue t_alpha;  ///< n!/j! e^{-alpha j} / (rho^n (1 - e^alpha rho)^{1/2} sqrt(2 pi n))
  LogValue center;   ///< (sqrt(2 pi n) mu(j/n))^{-1} (n^{1-j/n} psi(j/n))^n

  LogValue band_low(double c) const;   ///< center e^{-1/12} / c
  LogValue band_high(double c) const;  ///< center e^{1/12} c
};

/// Requires 1 <= j <= n-1.
BenderEstimate bender_estimate(int n, int j);
LogValue bender_T_log(int n, int j);

/// (1 + e^a) rho sigma - (1 - e^a rho)^{1/2} at a = delta(x), sigma^2 = x^2 (1 - e^a rho).
double bender_identity_residual(double x);

// Per-(n, j) comparison ---------------------------------------------------------

enum class Verdict { pass, fail };

struct BoundReport {
  int n = 0;
  int j = 0;
  LogValue exact_log_S;
  std::optional<LogValue> trivial_raw_log;
  std::optional<LogValue> trivial_log;
  std::optional<LogValue> rennie_log;
  std::optional<LogValue> a5_log;
  std::optional<LogValue> a6_log;
  std::optional<LogValue> bender_log;  ///< band center
  std::optional<LogValue> bender_low;
  std::optional<LogValue> bender_high;
  std::optional<Verdict> trivial_verdict;
  std::optional<Verdict> rennie_verdict;
  std::optional<Verdict> a5_verdict;
  std::optional<Verdict> a6_verdict;

  /// Number of upper bounds present (trivial, Rennie, A5, A6, Bender).
  int bound_count() const;
  bool all_pass() const;
};

inline constexpr double kDefaultBenderC = 1.1;

BoundReport bound_report(int n, int j, double bender_c = kDefaultBenderC);
BoundReport bound_report(const StirlingTable& table, int n, int j,
                         double bender_c = kDefaultBenderC);

/// Maps a bound on S(n, j) into the normalized scale (bound / n^{n-j})^{1/n}.
double normalized_root(LogValue bound_on_s, int n, int j);

}  // namespace wordstat

#endif  // WORDSTAT_BOUNDS_HPP
