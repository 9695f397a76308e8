#include "wordstat/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wordstat/bounds.hpp"
#include "wordstat/log_value.hpp"
#include "wordstat/realfuncs.hpp"

namespace wordstat {

namespace {

using std::numbers::pi;

constexpr double kPoissonPoint = 1.0 - 1.0 / std::numbers::e;

struct Partial {
  long checked = 0;
  std::vector<Violation> violations;

  void check(const char* suite, int n, int j, double lhs, double rhs, double slack) {
    ++checked;
    if (!(lhs <= rhs + slack)) violations.push_back({suite, n, j, lhs, rhs});
  }
};

// Runs per_n for every n in [n_lo, n_hi] and concatenates the results in n
// order, so the output does not depend on scheduling.
template <class PerN>
SuiteResult sweep(int n_lo, int n_hi, Exec exec, PerN&& per_n) {
  SuiteResult out;
  if (n_hi < n_lo) return out;
  std::vector<Partial> parts(static_cast<std::size_t>(n_hi - n_lo + 1));
  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (int n = n_lo; n <= n_hi; ++n) per_n(n, parts[n - n_lo]);
  for (auto& p : parts) {
    out.checked += p.checked;
    for (auto& v : p.violations) out.violations.push_back(std::move(v));
  }
  return out;
}

double log_n(int n) { return std::log(static_cast<double>(n)); }

void require_table(const StirlingTable& table, int n_max, const char* what) {
  if (table.n_max() < n_max) {
    throw std::invalid_argument(std::string(what) + ": Stirling table too small for n_max = " +
                                std::to_string(n_max));
  }
}

}  // namespace

TheoremConfig TheoremConfig::make(double r0, double r1, std::optional<double> r) {
  const LambdaCertificate cert = lambda_for(r0, r1);  // validates r0, r1
  TheoremConfig c;
  c.r0 = r0;
  c.r1 = r1;
  c.r = r.value_or(std::min(r0, 1.0 - r1));
  if (!(c.r > 0.0 && c.r < 0.5)) throw std::domain_error("TheoremConfig: r must lie in (0, 1/2)");
  c.lambda0 = cert.lambda0;
  c.lambda1 = cert.lambda1;
  c.lambda = cert.lambda;
  return c;
}

bool ratio_in(int n, int j, double lo, double hi) {
  constexpr double eps = 1e-9;
  return j >= lo * n - eps && j <= hi * n + eps;
}

bool theorem1_coverage(const TheoremConfig& config, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 1; j <= n; ++j) {
      const bool tail = ratio_in(n, j, 0.0, config.r0) || ratio_in(n, j, config.r1, 1.0);
      const bool center = ratio_in(n, j, config.r, 1.0 - config.r);
      if (!tail && !center) return false;
    }
  }
  return true;
}

SuiteResult verify_lemma10(const StirlingTable& table, int n_max, Exec exec) {
  require_table(table, n_max, "verify_lemma10");
  return sweep(2, n_max, exec, [&](int n, Partial& p) {
    const BigInt nn = power(n, n);
    for (int j = 1; j <= n - 1; ++j) {
      const double lhs = log_ratio(table.word_count(n, j), nn);
      const double rhs = 0.5 * log_n(j) + n * log_nu(static_cast<double>(j) / n);
      p.check("lemma10", n, j, lhs, rhs, kVerdictSlack);
    }
  });
}

SuiteResult verify_theorem1_tails(const TheoremConfig& config, const StirlingTable& table,
                                  int n_max, double c, int n_min, Exec exec) {
  require_table(table, n_max, "verify_theorem1_tails");
  if (!(c > 0.0)) throw std::invalid_argument("verify_theorem1_tails: constant must be positive");
  const double log_lambda = std::log(config.lambda);
  return sweep(std::max(n_min, 1), n_max, exec, [&](int n, Partial& p) {
    const BigInt nn = power(n, n);
    const double rhs = std::log(c) + 0.5 * log_n(n) + n * log_lambda;
    for (int j = 1; j <= n; ++j) {
      if (!ratio_in(n, j, 0.0, config.r0) && !ratio_in(n, j, config.r1, 1.0)) continue;
      p.check("tails", n, j, log_ratio(table.word_count(n, j), nn), rhs, kVerdictSlack);
    }
  });
}

CenterResult verify_theorem1_center(double r, std::span<const int> n_list,
                                    const StirlingTable& table, Exec exec) {
  if (n_list.empty()) throw std::invalid_argument("verify_theorem1_center: empty n list");
  const MuExtrema ext = mu_extrema(r, exec);
  CenterResult out;
  out.c1 = 1.0 / ext.max;
  out.C1 = 1.0 / ext.min;

  struct Row {
    double log_c = std::numeric_limits<double>::infinity();
    double log_C = -std::numeric_limits<double>::infinity();
    int c_j = 0, C_j = 0;
    Partial partial;
  };
  for (const int n : n_list) require_table(table, n, "verify_theorem1_center");
  std::vector<Row> rows(n_list.size());
  const bool par = exec == Exec::parallel;
  const auto count = static_cast<long>(n_list.size());
#pragma omp parallel for schedule(dynamic) if (par)
  for (long i = 0; i < count; ++i) {
    const int n = n_list[i];
    Row& row = rows[i];
    const BigInt nn = power(n, n);
    for (int j = 1; j <= n - 1; ++j) {
      if (!ratio_in(n, j, r, 1.0 - r)) continue;
      const double x = static_cast<double>(j) / n;
      const double la = log_ratio(table.word_count(n, j), nn);
      const double n_log_phi = n * log_phi(x);
      const double upper_ratio = la - n_log_phi;
      const double lower_ratio = 0.5 * log_n(n) + la - n_log_phi;
      if (upper_ratio > row.log_C) {
        row.log_C = upper_ratio;
        row.C_j = j;
      }
      if (lower_ratio < row.log_c) {
        row.log_c = lower_ratio;
        row.c_j = j;
      }
      const double base = -0.5 * std::log(2.0 * pi * (n - j)) + n_log_phi;
      row.partial.check("center_lower", n, j, -1.0 / 6.0 + std::log(out.c1) + base, la, kVerdictSlack);
      row.partial.check("center_upper", n, j, la, 1.0 / 6.0 + std::log(out.C1) + base, kVerdictSlack);
    }
  }

  FittedConstants& f = out.fitted;
  f.r = r;
  f.n_lo = *std::min_element(n_list.begin(), n_list.end());
  f.n_hi = *std::max_element(n_list.begin(), n_list.end());
  double log_c = std::numeric_limits<double>::infinity();
  double log_C = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    if (row.C_j != 0 && row.log_C > log_C) {
      log_C = row.log_C;
      f.C_at_n = n_list[i];
      f.C_at_j = row.C_j;
    }
    if (row.c_j != 0 && row.log_c < log_c) {
      log_c = row.log_c;
      f.c_at_n = n_list[i];
      f.c_at_j = row.c_j;
    }
    out.checked += row.partial.checked;
    for (const auto& v : row.partial.violations) out.violations.push_back(v);
  }
  f.c_fit = std::exp(log_c);
  f.C_fit = std::exp(log_C);
  return out;
}

namespace {

TailSummary summarize_tails(const std::vector<BigInt>& words, int n, double epsilon) {
  if (n < 2) throw std::invalid_argument("tail_sum: need n >= 2");
  if (!(epsilon > 0.0)) throw std::invalid_argument("tail_sum: epsilon must be positive");
  TailSummary t;
  t.n = n;
  t.epsilon = epsilon;
  t.ell_low = static_cast<int>(std::floor((kPoissonPoint - epsilon) * n));
  t.ell_high = static_cast<int>(std::ceil((kPoissonPoint + epsilon) * n));
  const BigInt nn = power(n, n);
  constexpr double neg_inf = -std::numeric_limits<double>::infinity();

  const auto side = [&](int lo, int hi, double& log_sum, double& log_max) {
    BigInt sum = 0;
    BigInt top = 0;
    for (int j = lo; j <= hi; ++j) {
      sum += words[j];
      if (words[j] > top) top = words[j];
    }
    log_sum = log_ratio(sum, nn);
    log_max = log_ratio(top, nn);
    return top <= sum && sum <= n * top;
  };

  bool ok = true;
  t.lower_empty = t.ell_low < 1;
  if (t.lower_empty) {
    t.log_lower_tail = t.log_lower_max = neg_inf;
  } else {
    ok = side(1, std::min(t.ell_low, n), t.log_lower_tail, t.log_lower_max) && ok;
  }
  t.upper_empty = t.ell_high > n;
  if (t.upper_empty) {
    t.log_upper_tail = t.log_upper_max = neg_inf;
  } else {
    ok = side(std::max(t.ell_high, 1), n, t.log_upper_tail, t.log_upper_max) && ok;
  }
  t.bracket_holds = ok;
  t.rate_low = t.log_lower_tail / n;
  t.rate_high = t.log_upper_tail / n;
  return t;
}

}  // namespace

TailSummary tail_sum(const StirlingTable& table, int n, double epsilon) {
  require_table(table, n, "tail_sum");
  return summarize_tails(table.word_counts(n), n, epsilon);
}

TailSummary tail_sum(int n, double epsilon) {
  if (n < 2) throw std::invalid_argument("tail_sum: need n >= 2");
  const std::vector<BigInt> row = stirling2_row(n);
  std::vector<BigInt> words(row.size());
  BigInt falling = 1;
  for (int j = 0; j <= n; ++j) {
    words[j] = falling * row[j];
    falling *= n - j;
  }
  return summarize_tails(words, n, epsilon);
}

DecayReport decay_rate_check(double epsilon, std::span<const int> n_list,
                             const StirlingTable& table) {
  if (n_list.size() < 2) throw std::invalid_argument("decay_rate_check: need at least two n");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw std::invalid_argument("decay_rate_check: n list must increase");
  }
  DecayReport d;
  d.epsilon = epsilon;
  for (const int n : n_list) d.summaries.push_back(tail_sum(table, n, epsilon));

  const auto total = [](const TailSummary& t) {
    return (LogValue::from_log(t.log_lower_tail) + LogValue::from_log(t.log_upper_tail)).log();
  };
  for (std::size_t i = 0; i < d.summaries.size(); ++i) {
    const TailSummary& t = d.summaries[i];
    d.brackets_hold = d.brackets_hold && t.bracket_holds;
    for (const double l : {t.log_lower_tail, t.log_upper_tail}) {
      if (!(l < 0.0)) d.masses_below_one = false;
    }
    if (!(t.rate_low < 0.0 && t.rate_high < 0.0)) d.rates_negative = false;
    if (i > 0) {
      const TailSummary& prev = d.summaries[i - 1];
      if (t.log_lower_tail > prev.log_lower_tail || t.log_upper_tail > prev.log_upper_tail) {
        d.non_increasing = false;
      }
    }
  }
  const TailSummary& last = d.summaries.back();
  const TailSummary& prev = d.summaries[d.summaries.size() - 2];
  const double gap = last.n - prev.n;
  d.lambda_fit = std::exp((total(last) - total(prev)) / gap);
  d.lambda_fit_low = std::exp((last.log_lower_tail - prev.log_lower_tail) / gap);
  d.lambda_fit_high = std::exp((last.log_upper_tail - prev.log_upper_tail) / gap);
  return d;
}

int mode_location(const StirlingTable& table, int n) {
  const std::vector<BigInt> words = table.word_counts(n);
  return static_cast<int>(std::max_element(words.begin(), words.end()) - words.begin());
}

RootDeviation nth_root_deviation(const StirlingTable& table, int n, double lo, double hi) {
  require_table(table, n, "nth_root_deviation");
  RootDeviation d;
  const BigInt nn = power(n, n);
  for (int j = 1; j <= n - 1; ++j) {
    if (!ratio_in(n, j, lo, hi)) continue;
    const double root = std::exp(log_ratio(table.word_count(n, j), nn) / n);
    const double dev = std::abs(root - phi(static_cast<double>(j) / n));
    if (dev > d.max_abs) {
      d.max_abs = dev;
      d.at_j = j;
    }
  }
  return d;
}

BenderBand verify_bender_band(const StirlingTable& table, int n, double r, double c) {
  require_table(table, n, "verify_bender_band");
  BenderBand b;
  b.n = n;
  b.r = r;
  b.c = c;
  for (int j = 1; j <= n - 1; ++j) {
    if (!ratio_in(n, j, r, 1.0 - r)) continue;
    const BenderEstimate e = bender_estimate(n, j);
    const double ls = log_big(table.at(n, j));
    ++b.checked;
    if (ls < e.band_low(c).log() - kVerdictSlack) {
      b.violations.push_back({"bender_lower", n, j, e.band_low(c).log(), ls});
    }
    if (ls > e.band_high(c).log() + kVerdictSlack) {
      b.violations.push_back({"bender_upper", n, j, ls, e.band_high(c).log()});
    }
    b.max_log_ratio_center = std::max(b.max_log_ratio_center, std::abs(ls - e.center.log()));
    b.max_log_ratio_t = std::max(b.max_log_ratio_t, std::abs(ls - e.t_alpha.log()));
  }
  return b;
}

SuiteResult verify_bound_soundness(const StirlingTable& table, int n_min, int n_max, Exec exec) {
  require_table(table, n_max, "verify_bound_soundness");
  return sweep(std::max(n_min, 1), n_max, exec, [&](int n, Partial& p) {
    for (int j = 1; j <= n; ++j) {
      const double ls = log_big(table.at(n, j));
      const TrivialBound t = bound_trivial(n, j);
      p.check("trivial_raw", n, j, ls, t.raw.log(), kVerdictSlack);
      p.check("trivial_theta", n, j, ls, t.theta_form.log(), kVerdictSlack);
      p.check("trivial_form_lower", n, j, t.theta_lower.log(), t.raw.log(), kVerdictSlack);
      p.check("trivial_form_upper", n, j, t.raw.log(), t.theta_form.log(), kVerdictSlack);
      if (j <= n - 1) {
        const RennieBound rb = bound_rennie(n, j);
        p.check("rennie", n, j, ls, rb.bound.log(), kVerdictSlack);
        p.check("rennie_eta_lower", n, j, rb.eta_lower.log(), rb.product.log(), kVerdictSlack);
        p.check("rennie_eta_upper", n, j, rb.product.log(), rb.eta_upper.log(), kVerdictSlack);
      }
      if (n >= 3 && j <= n - 2) {
        p.check("a5", n, j, ls, bound_A5_log(n, j).log(), kVerdictSlack);
        p.check("a6", n, j, ls, bound_A6_log(n, j).log(), kVerdictSlack);
      }
    }
  });
}

SuiteResult verify_lemma4(int n_max, Exec exec) {
  return sweep(3, n_max, exec, [&](int n, Partial& p) {
    for (int j = 1; j <= n - 2; ++j) {
      for (const InequalityCheck& c : lemma4_checks(n, j)) {
        ++p.checked;
        if (!c.holds) p.violations.push_back({"lemma4 " + c.name, n, j, c.lhs, c.rhs});
      }
      p.check("lemma4 Q<=1/2", n, j, ads_internals(n, j).q, 0.5, 0.0);
    }
  });
}

SuiteResult verify_ads_kappa(int n_max, Exec exec) {
  return sweep(3, n_max, exec, [&](int n, Partial& p) {
    for (int j = 1; j <= n - 2; ++j) {
      for (const InequalityCheck& c : ads_kappa_checks(n, j)) {
        ++p.checked;
        if (!c.holds) p.violations.push_back({"ads_kappa " + c.name, n, j, c.lhs, c.rhs});
      }
    }
  });
}

SuiteResult verify_binomial_sandwiches(int n_max, Exec exec) {
  return sweep(1, n_max, exec, [&](int n, Partial& p) {
    ++p.checked;
    if (!robbins_sandwich_check(n)) {
      p.violations.push_back({"robbins", n, 0, log_big(factorial(n)), 0.0});
    }
    for (int j = 1; j <= n - 1; ++j) {
      ++p.checked;
      if (!binomial_sandwich_check(n, j)) {
        p.violations.push_back({"binomial", n, j, log_big(binomial(n, j)),
                                n * log_varphi(static_cast<double>(j) / n)});
      }
    }
  });
}

std::size_t VerificationReport::violation_count() const {
  std::size_t total = 0;
  for (const auto& [name, suite] : suites) total += suite.violations.size();
  return total;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"binomial", "bounds", "lemma4",  "ads_kappa",
                                              "lemma10",  "tails",  "center",  "corollary2",
                                              "coverage"};
  return names;
}

namespace {

// 50, 100, ... up to n_max; a two-point fallback for small n_max.
std::vector<int> checkpoint_list(int n_max) {
  std::vector<int> out;
  for (int n = 50; n <= n_max; n += 50) out.push_back(n);
  if (out.size() < 2) {
    out.clear();
    if (n_max >= 4) out.push_back(n_max / 2);
    out.push_back(n_max);
  }
  return out;
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.n_max < 3) throw std::invalid_argument("run_verification: n_max must be >= 3");
  const auto& known = verify_suite_names();
  for (const auto& s : options.suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw std::invalid_argument("unknown suite: " + s);
    }
  }
  const auto enabled = [&](const std::string& s) {
    return options.suites.empty() ||
           std::find(options.suites.begin(), options.suites.end(), s) != options.suites.end();
  };

  VerificationReport rep;
  rep.config = options.config;
  rep.n_max = options.n_max;
  rep.epsilon = options.epsilon;
  const Exec exec = options.exec;
  const StirlingTable table(options.n_max, exec);
  const std::vector<int> checkpoints = checkpoint_list(options.n_max);

  if (enabled("binomial")) rep.suites["binomial"] = verify_binomial_sandwiches(options.n_max, exec);
  if (enabled("bounds")) rep.suites["bounds"] = verify_bound_soundness(table, 1, options.n_max, exec);
  if (enabled("lemma4")) rep.suites["lemma4"] = verify_lemma4(options.n_max, exec);
  if (enabled("ads_kappa")) rep.suites["ads_kappa"] = verify_ads_kappa(options.n_max, exec);
  if (enabled("lemma10")) rep.suites["lemma10"] = verify_lemma10(table, options.n_max, exec);
  if (enabled("tails")) {
    rep.suites["tails"] = verify_theorem1_tails(options.config, table, options.n_max, 1.0, 2, exec);
  }
  if (enabled("center")) {
    CenterResult c = verify_theorem1_center(options.config.r, checkpoints, table, exec);
    rep.suites["center"] = SuiteResult{c.checked, c.violations};
    rep.center = std::move(c);
  }
  if (enabled("corollary2") && checkpoints.size() >= 2) {
    DecayReport d = decay_rate_check(options.epsilon, checkpoints, table);
    SuiteResult s;
    for (const TailSummary& t : d.summaries) {
      ++s.checked;
      if (!t.bracket_holds) s.violations.push_back({"corollary2 bracket", t.n, 0, 0.0, 0.0});
      if (!(t.log_lower_tail < 0.0 && t.log_upper_tail < 0.0)) {
        s.violations.push_back({"corollary2 mass", t.n, 0,
                                std::max(t.log_lower_tail, t.log_upper_tail), 0.0});
      }
    }
    if (!d.non_increasing) {
      s.violations.push_back({"corollary2 monotone", checkpoints.back(), 0, 0.0, 0.0});
    }
    if (!(d.lambda_fit < 1.0)) {
      s.violations.push_back({"corollary2 lambda_fit", checkpoints.back(), 0, d.lambda_fit, 1.0});
    }
    rep.suites["corollary2"] = std::move(s);
    rep.decay = std::move(d);
  }
  if (enabled("coverage")) {
    SuiteResult s;
    s.checked = 1;
    if (!theorem1_coverage(options.config, options.n_max)) {
      s.violations.push_back({"coverage", options.n_max, 0, options.config.r,
                              std::min(options.config.r0, 1.0 - options.config.r1)});
    }
    rep.suites["coverage"] = std::move(s);
  }
  return rep;
}

}  // namespace wordstat
