#include "wordstat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wordstat/realfuncs.hpp"

namespace wordstat {

namespace {

using std::numbers::pi;

const double kHalfLog2Pi = 0.5 * std::log(2.0 * pi);

void require(bool ok, const char* what, int n, int j) {
  if (!ok) {
    throw std::invalid_argument(std::string(what) + ": (n, j) = (" + std::to_string(n) + ", " +
                                std::to_string(j) + ") out of range");
  }
}

void require_ads(int n, int j) { require(n >= 3 && j >= 1 && j <= n - 2, "ads", n, j); }

// ln (n^{1 - j/n} f(j/n))^n = (n - j) ln n + n ln f(j/n)
double normal_form(int n, int j, double log_f) {
  return (n - j) * std::log(static_cast<double>(n)) + n * log_f;
}

double ratio(int n, int j) { return static_cast<double>(j) / n; }

InequalityCheck leq(std::string name, double lhs, double rhs, double slack) {
  return {std::move(name), lhs, rhs, lhs <= rhs + slack};
}

}  // namespace

bool robbins_sandwich_check(int n) {
  if (n < 1) throw std::invalid_argument("robbins_sandwich_check: need n >= 1");
  const double exact = log_big(factorial(n));
  const double lower = kHalfLog2Pi + (n + 0.5) * std::log(static_cast<double>(n)) - n;
  const double upper = lower + 1.0 / 12.0;
  return lower <= exact + kVerdictSlack && exact <= upper + kVerdictSlack;
}

double binomial_lower_constant() { return 1.0 / (std::sqrt(2.0 * pi) * std::exp(1.0 / 6.0)); }

double binomial_upper_constant() { return std::exp(1.0 / 12.0) / std::sqrt(2.0 * pi); }

bool binomial_sandwich_check(int n, int j) {
  require(n >= 2 && j >= 1 && j <= n - 1, "binomial_sandwich_check", n, j);
  const double lv = n * log_varphi(ratio(n, j));
  const double half_log_n = 0.5 * std::log(static_cast<double>(n));
  const double chain[5] = {
      lv - std::log(2.0) - half_log_n,
      std::log(2.0 * binomial_lower_constant()) - half_log_n + lv,
      log_big(binomial(n, j)),
      std::log(std::sqrt(2.0) * binomial_upper_constant()) + lv,
      lv,
  };
  for (int i = 0; i + 1 < 5; ++i) {
    if (chain[i] > chain[i + 1] + kVerdictSlack) return false;
  }
  return true;
}

TrivialBound bound_trivial(int n, int j) {
  require(n >= 1 && j >= 1 && j <= n, "bound_trivial", n, j);
  TrivialBound b;
  b.raw = LogValue::from_log(log_ratio(power(j, n), factorial(j)));
  const double theta_form =
      -0.5 * std::log(2.0 * pi * j) + normal_form(n, j, log_theta(ratio(n, j)));
  b.theta_form = LogValue::from_log(theta_form);
  b.theta_lower = LogValue::from_log(theta_form - 1.0 / 12.0);
  return b;
}

LogValue bound_trivial_log(int n, int j) { return bound_trivial(n, j).theta_form; }

RennieBound bound_rennie(int n, int j) {
  require(n >= 2 && j >= 1 && j <= n - 1, "bound_rennie", n, j);
  RennieBound b;
  const double product = log_big(binomial(n, j) * power(j, n - j));
  b.product = LogValue::from_log(product);
  b.bound = LogValue::from_log(product - std::log(2.0));
  const double upper = normal_form(n, j, log_eta(ratio(n, j)));
  b.eta_upper = LogValue::from_log(upper);
  b.eta_lower = LogValue::from_log(upper - std::log(2.0 * std::sqrt(static_cast<double>(n))));
  return b;
}

LogValue bound_rennie_log(int n, int j) { return bound_rennie(n, j).bound; }

AdsInternals ads_internals(int n, int j) {
  require_ads(n, j);
  AdsInternals a;
  a.n = n;
  a.j = j;
  a.big_n = binomial(n, 2);

  const double nn = n;
  const double m = n - j;
  const double big_n = nn * (nn - 1) / 2;
  const double big_n_choose_2 = big_n * (big_n - 1) / 2;
  const double n_choose_3 = nn * (nn - 1) * (nn - 2) / 6;
  const double n_choose_4 = n_choose_3 * (nn - 3) / 4;
  const double m_choose_2 = m * (m - 1) / 2;
  const double n_sq = big_n * big_n;

  a.mu5 = m_choose_2 * n_choose_3 / big_n_choose_2;
  a.mu6 = m_choose_2 * nn * (nn - 1) * (4 * nn - 5) / (6 * n_sq);

  a.p = 2 * n_choose_3 / big_n_choose_2;
  a.q = (13 - 12 * m + 3 * m * m) / big_n_choose_2;
  a.rr = 8 * n_choose_3 / big_n_choose_2;
  a.s = 6 * n_choose_4 / (n_choose_3 * (big_n - 2));
  a.t = (5 * nn - 11) / 4 / (big_n - 2);
  a.d5 = a.p + a.q + (1 - a.q) * (m - 2) * (a.rr + a.s + a.t);

  a.u = nn * (nn - 1) * (4 * nn - 5) / (6 * n_sq);
  a.v = 4 * (m - 2) * nn * (nn - 1) * (2 * nn - 1) / (6 * n_sq);
  a.w = 3 * (m - 2) * nn * (nn - 1) / ((4 * nn - 5) * big_n);
  a.z = 2 * (m - 2) * (2 * nn - 1) * (nn + 1) / ((4 * nn - 5) * big_n);
  // The correction term of d6 sums V, W and Z.
  a.d6 = a.u + 2 * (a.v + a.w + a.z);

  a.cap_d5 = std::min({a.d5, 2 * a.mu5 * a.d5, 1.0});
  a.cap_d6 = std::min({a.d6, 2 * a.mu6 * a.d6, 1.0});
  return a;
}

double ads_factor(double m, double cap_d) { return std::exp(-m) + cap_d; }

LogValue bound_A5_log(int n, int j) {
  const AdsInternals a = ads_internals(n, j);
  return LogValue::from_log(log_big(binomial(a.big_n, n - j)) +
                            std::log(ads_factor(2 * a.mu5, a.cap_d5)));
}

LogValue bound_A6_log(int n, int j) {
  const AdsInternals a = ads_internals(n, j);
  const double main = log_ratio(boost::multiprecision::pow(a.big_n, static_cast<unsigned>(n - j)),
                                factorial(n - j));
  return LogValue::from_log(main + std::log(ads_factor(a.mu6, a.cap_d6)));
}

std::vector<InequalityCheck> lemma4_checks(int n, int j, double slack) {
  const AdsInternals a = ads_internals(n, j);
  const double low = 1.0 / (2.0 * n * n);
  std::vector<InequalityCheck> out;
  const auto both = [&](const std::string& tag, double m, double d) {
    const double f = ads_factor(m, d);
    out.push_back(leq(tag + " lower", low, f, slack));
    out.push_back(leq(tag + " upper", f, 2.0, slack));
  };
  both("mu5", a.mu5, a.cap_d5);
  both("mu6", a.mu6, a.cap_d6);
  both("2mu5", 2 * a.mu5, a.cap_d5);
  return out;
}

bool lemma4_sandwich_check(int n, int j, double slack) {
  const auto checks = lemma4_checks(n, j, slack);
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

std::vector<InequalityCheck> ads_kappa_checks(int n, int j, double slack) {
  require_ads(n, j);
  const AdsInternals a = ads_internals(n, j);
  const int m = n - j;
  const double nn = n;
  const double k = normal_form(n, j, log_kappa(ratio(n, j)));

  const double binom = log_big(binomial(a.big_n, m));
  const double power_ratio =
      log_ratio(boost::multiprecision::pow(a.big_n, static_cast<unsigned>(m)), factorial(m));
  const double a5 = binom + std::log(ads_factor(2 * a.mu5, a.cap_d5));
  const double a6 = power_ratio + std::log(ads_factor(a.mu6, a.cap_d6));

  const double prop_low = -2.0 - std::log(4.0 * nn * nn * nn) + k;
  const double prop_high = std::log(2.0) + k;

  return {
      leq("C(N,n-j) lower", -2.0 - std::log(2.0 * std::sqrt(nn * (nn - 1))) + k, binom, slack),
      leq("C(N,n-j) upper", binom, k, slack),
      leq("N^(n-j)/(n-j)! lower", -std::log(4.0 * std::sqrt(2.0 * pi * nn)) + k, power_ratio,
          slack),
      leq("N^(n-j)/(n-j)! upper", power_ratio, -kHalfLog2Pi + k, slack),
      leq("A5 lower", prop_low, a5, slack),
      leq("A5 upper", a5, prop_high, slack),
      leq("A6 lower", prop_low, a6, slack),
      leq("A6 upper", a6, prop_high, slack),
  };
}

bool ads_kappa_sandwich_check(int n, int j) {
  const auto checks = ads_kappa_checks(n, j);
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

LogValue BenderEstimate::band_low(double c) const {
  return LogValue::from_log(center.log() - 1.0 / 12.0 - std::log(c));
}

LogValue BenderEstimate::band_high(double c) const {
  return LogValue::from_log(center.log() + 1.0 / 12.0 + std::log(c));
}

BenderEstimate bender_estimate(int n, int j) {
  require(n >= 2 && j >= 1 && j <= n - 1, "bender_estimate", n, j);
  const double x = ratio(n, j);
  BenderEstimate b;
  b.n = n;
  b.j = j;
  b.alpha = delta(x);
  b.rho = softplus(b.alpha);
  const double log_2pi_n = std::log(2.0 * pi * n);
  b.t_alpha = LogValue::from_log(log_ratio(factorial(n), factorial(j)) - b.alpha * j -
                                 n * std::log(b.rho) -
                                 0.5 * std::log(one_minus_exp_softplus(b.alpha)) - 0.5 * log_2pi_n);
  b.center = LogValue::from_log(-0.5 * log_2pi_n - std::log(mu(x)) + normal_form(n, j, log_psi(x)));
  return b;
}

LogValue bender_T_log(int n, int j) { return bender_estimate(n, j).t_alpha; }

double bender_identity_residual(double x) {
  const double a = delta(x);
  const double rho = softplus(a);
  const double v = one_minus_exp_softplus(a);
  const double sigma = x * std::sqrt(v);
  return (1.0 + std::exp(a)) * rho * sigma - std::sqrt(v);
}

int BoundReport::bound_count() const {
  return static_cast<int>(trivial_log.has_value()) + static_cast<int>(rennie_log.has_value()) +
         static_cast<int>(a5_log.has_value() || a6_log.has_value()) +
         static_cast<int>(bender_log.has_value());
}

bool BoundReport::all_pass() const {
  for (const auto& v : {trivial_verdict, rennie_verdict, a5_verdict, a6_verdict}) {
    if (v && *v == Verdict::fail) return false;
  }
  return true;
}

namespace {

Verdict judge(LogValue exact, LogValue bound) {
  return exact.log() <= bound.log() + kVerdictSlack ? Verdict::pass : Verdict::fail;
}

BoundReport assemble(int n, int j, const BigInt& s, double bender_c) {
  require(n >= 1 && j >= 1 && j <= n, "bound_report", n, j);
  BoundReport r;
  r.n = n;
  r.j = j;
  r.exact_log_S = LogValue::from_big(s);

  const TrivialBound t = bound_trivial(n, j);
  r.trivial_raw_log = t.raw;
  r.trivial_log = t.theta_form;
  // Both trivial forms must hold.
  r.trivial_verdict = judge(r.exact_log_S, t.raw) == Verdict::pass &&
                              judge(r.exact_log_S, t.theta_form) == Verdict::pass
                          ? Verdict::pass
                          : Verdict::fail;

  if (j <= n - 1) {
    r.rennie_log = bound_rennie_log(n, j);
    r.rennie_verdict = judge(r.exact_log_S, *r.rennie_log);

    const BenderEstimate b = bender_estimate(n, j);
    r.bender_log = b.center;
    r.bender_low = b.band_low(bender_c);
    r.bender_high = b.band_high(bender_c);
  }
  if (n >= 3 && j <= n - 2) {
    r.a5_log = bound_A5_log(n, j);
    r.a6_log = bound_A6_log(n, j);
    r.a5_verdict = judge(r.exact_log_S, *r.a5_log);
    r.a6_verdict = judge(r.exact_log_S, *r.a6_log);
  }
  return r;
}

}  // namespace

BoundReport bound_report(int n, int j, double bender_c) {
  require(n >= 1 && j >= 1 && j <= n, "bound_report", n, j);
  return assemble(n, j, stirling2_alternating(n, j), bender_c);
}

BoundReport bound_report(const StirlingTable& table, int n, int j, double bender_c) {
  require(n >= 1 && j >= 1 && j <= n, "bound_report", n, j);
  return assemble(n, j, table.at(n, j), bender_c);
}

double normalized_root(LogValue bound_on_s, int n, int j) {
  return std::exp((bound_on_s.log() - (n - j) * std::log(static_cast<double>(n))) / n);
}

}  // namespace wordstat
