#include "wordstat/cli.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordstat/bigcomb.hpp"
#include "wordstat/bounds.hpp"
#include "wordstat/realfuncs.hpp"

namespace wordstat {

namespace {

using std::numbers::pi;

Cell opt_log(const std::optional<LogValue>& v) {
  if (!v) return std::monostate{};
  return v->log();
}

Cell verdict_cell(const std::optional<Verdict>& v) {
  if (!v) return std::monostate{};
  return std::string(*v == Verdict::pass ? "pass" : "fail");
}

}  // namespace

Table exact_table(int n_lo, int n_hi, int j_only) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("exact: need 1 <= n <= n-max");
  if (j_only < 0 || (j_only > 0 && j_only > n_lo)) {
    throw std::invalid_argument("exact: j must lie in [1, n]");
  }
  const StirlingTable table(n_hi, Exec::parallel);
  Table t({"n", "j", "S_n_j", "a_n_j", "log_norm_a", "nth_root_a_over_n"});
  for (int n = n_lo; n <= n_hi; ++n) {
    const BigInt nn = power(n, n);
    const int lo = j_only > 0 ? j_only : 1;
    const int hi = j_only > 0 ? j_only : n;
    for (int j = lo; j <= hi; ++j) {
      const BigInt a = table.word_count(n, j);
      const double ln = log_ratio(a, nn);
      t.add_row({static_cast<long long>(n), static_cast<long long>(j), BigText{format_big(table.at(n, j))},
                 BigText{format_big(a)}, ln, std::exp(ln / n)});
    }
  }
  return t;
}

Table bounds_table(int n, int j_lo, int j_hi, double bender_c) {
  if (n < 1 || j_lo < 1 || j_hi > n || j_lo > j_hi) {
    throw std::invalid_argument("bounds: need 1 <= j <= n");
  }
  if (!(bender_c >= 1.0)) throw std::invalid_argument("bounds: band constant must be >= 1");
  const StirlingTable table(n, Exec::parallel);
  Table t({"n", "j", "log_S", "trivial_raw", "trivial_theta", "rennie", "a5", "a6", "bender_center",
           "bender_low", "bender_high", "trivial_verdict", "rennie_verdict", "a5_verdict", "a6_verdict",
           "bound_count"});
  for (int j = j_lo; j <= j_hi; ++j) {
    const BoundReport r = bound_report(table, n, j, bender_c);
    t.add_row({static_cast<long long>(n), static_cast<long long>(j), r.exact_log_S.log(),
               opt_log(r.trivial_raw_log), opt_log(r.trivial_log), opt_log(r.rennie_log), opt_log(r.a5_log),
               opt_log(r.a6_log), opt_log(r.bender_log), opt_log(r.bender_low), opt_log(r.bender_high),
               verdict_cell(r.trivial_verdict), verdict_cell(r.rennie_verdict), verdict_cell(r.a5_verdict),
               verdict_cell(r.a6_verdict), static_cast<long long>(r.bound_count())});
  }
  return t;
}

Table figure1_table() {
  constexpr int n = 200;
  const StirlingTable table(n, Exec::parallel);
  Table t({"j", "x", "nth_root_a_over_n", "phi"});
  for (int j = 0; j <= n; j += 5) {
    const double x = static_cast<double>(j) / n;
    const double root = j == 0 ? 0.0 : std::exp(normalized_log_a(table, n, j) / n);
    t.add_row({static_cast<long long>(j), x, root, phi_closed(x)});
  }
  return t;
}

namespace {

Table long_form_grids(std::initializer_list<RealFunction> fs, int k_lo, int k_hi) {
  std::vector<double> xs;
  for (int k = k_lo; k <= k_hi; ++k) xs.push_back(k / 200.0);
  Table t({"function", "x", "value"});
  for (const RealFunction f : fs) {
    const FunctionGrid g = sample(f, xs, Exec::parallel);
    for (std::size_t i = 0; i < g.xs.size(); ++i) t.add_row({g.name, g.xs[i], g.ys[i]});
  }
  return t;
}

}  // namespace

Table figure2_table() { return long_form_grids({RealFunction::psi, RealFunction::mu}, 1, 199); }

Table figure4_table() { return long_form_grids({RealFunction::nu, RealFunction::varphi}, 0, 200); }

Table figure3_table() {
  constexpr int n = 100;
  constexpr double r = 0.1;
  const StirlingTable table(n, Exec::parallel);
  const double big_c1 = 1.0 / mu_extrema(r).min;
  const double psi_prefactor = std::pow(std::exp(1.0 / 12.0) * big_c1 / std::sqrt(2.0 * pi * n), 1.0 / n);
  Table t({"j", "x", "S_hat", "theta_form", "eta_form", "kappa_form", "psi_form"});
  for (int j = 1; j <= n; ++j) {
    const double x = static_cast<double>(j) / n;
    Cell eta_form, kappa_form, psi_form;
    if (j <= n - 1) eta_form = std::pow(2.0, -1.0 / n) * eta(x);
    if (j <= n - 2) kappa_form = std::pow(2.0, 1.0 / n) * kappa(x);
    if (ratio_in(n, j, r, 1.0 - r)) psi_form = psi_prefactor * psi(x);
    t.add_row({static_cast<long long>(j), x, nth_root_normalized_S(table, n, j),
               theta(x) / std::pow(2.0 * pi * j, 1.0 / (2.0 * n)), eta_form, kappa_form, psi_form});
  }
  return t;
}

Table tail_table(std::span<const int> ns, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("tail: epsilon must be positive");
  int n_max = 0;
  for (const int n : ns) {
    if (n < 2) throw std::invalid_argument("tail: n must be >= 2");
    n_max = std::max(n_max, n);
  }
  const StirlingTable table(n_max, Exec::parallel);
  Table t({"n", "epsilon", "ell_low", "ell_high", "lower_empty", "upper_empty", "log_lower_tail",
           "log_upper_tail", "rate_low", "rate_high", "log_lower_max", "log_upper_max", "bracket_holds"});
  for (const int n : ns) {
    const TailSummary s = tail_sum(table, n, epsilon);
    t.add_row({static_cast<long long>(n), epsilon, static_cast<long long>(s.ell_low),
               static_cast<long long>(s.ell_high), s.lower_empty, s.upper_empty, s.log_lower_tail,
               s.log_upper_tail, s.rate_low, s.rate_high, s.log_lower_max, s.log_upper_max, s.bracket_holds});
  }
  return t;
}

Table simulate_table(const EmpiricalLaw& law) {
  const std::vector<double> exact = exact_distinct_law(law.n);
  Table t({"j", "empirical_prob", "exact_prob", "diff"});
  for (int j = 1; j <= law.n; ++j) {
    const double e = law.probability(j);
    t.add_row({static_cast<long long>(j), e, exact[j], e - exact[j]});
  }
  return t;
}

namespace {

nlohmann::json violation_json(const Violation& v) {
  return {{"suite", v.suite}, {"n", v.n}, {"j", v.j}, {"lhs", json_real(v.lhs)}, {"rhs", json_real(v.rhs)}};
}

nlohmann::json tail_json(const TailSummary& s) {
  return {{"n", s.n},
          {"epsilon", s.epsilon},
          {"ell_low", s.ell_low},
          {"ell_high", s.ell_high},
          {"lower_empty", s.lower_empty},
          {"upper_empty", s.upper_empty},
          {"log_lower_tail", json_real(s.log_lower_tail)},
          {"log_upper_tail", json_real(s.log_upper_tail)},
          {"rate_low", json_real(s.rate_low)},
          {"rate_high", json_real(s.rate_high)},
          {"log_lower_max", json_real(s.log_lower_max)},
          {"log_upper_max", json_real(s.log_upper_max)},
          {"bracket_holds", s.bracket_holds}};
}

}  // namespace

nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json j;
  const TheoremConfig& c = report.config;
  j["config"] = {{"r0", c.r0},           {"r1", c.r1},           {"r", c.r},
                 {"lambda0", c.lambda0}, {"lambda1", c.lambda1}, {"lambda", c.lambda},
                 {"n_max", report.n_max}, {"epsilon", report.epsilon}, {"tail_n_min", 2}};
  if (report.center) {
    const CenterResult& cr = *report.center;
    const FittedConstants& f = cr.fitted;
    j["fitted_constants"] = {{"r", f.r},         {"n_lo", f.n_lo},       {"n_hi", f.n_hi},
                             {"c_fit", f.c_fit}, {"C_fit", f.C_fit},     {"c_at", {f.c_at_n, f.c_at_j}},
                             {"C_at", {f.C_at_n, f.C_at_j}},             {"c1", cr.c1},
                             {"C1", cr.C1}};
  } else {
    j["fitted_constants"] = nullptr;
  }
  nlohmann::json suites = nlohmann::json::object();
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& [name, s] : report.suites) {
    suites[name] = {{"checked", s.checked}, {"violations", s.violations.size()}};
    for (const Violation& v : s.violations) violations.push_back(violation_json(v));
  }
  j["suites"] = std::move(suites);
  j["violations"] = std::move(violations);
  nlohmann::json tails = nlohmann::json::array();
  if (report.decay) {
    const DecayReport& d = *report.decay;
    for (const TailSummary& s : d.summaries) tails.push_back(tail_json(s));
    j["decay"] = {{"epsilon", d.epsilon},
                  {"masses_below_one", d.masses_below_one},
                  {"rates_negative", d.rates_negative},
                  {"non_increasing", d.non_increasing},
                  {"brackets_hold", d.brackets_hold},
                  {"lambda_fit", json_real(d.lambda_fit)},
                  {"lambda_fit_low", json_real(d.lambda_fit_low)},
                  {"lambda_fit_high", json_real(d.lambda_fit_high)}};
  }
  j["tail_summaries"] = std::move(tails);
  j["violation_count"] = report.violation_count();
  return j;
}

namespace {

struct Options {
  int n = 0;
  int n_max = 0;
  int verify_n_max = 100;
  int j = 0;
  std::vector<int> ns;
  std::optional<double> r;
  double r0 = 0.1;
  double r1 = 0.9;
  double epsilon = 0.15;
  double bender_c = kDefaultBenderC;
  long trials = 100000;
  std::uint64_t seed = 42;
  int figure = 0;
  std::string output;
  std::string format = "csv";
  std::vector<std::string> suites;
};

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : opts_(o), out_(out) {}

  void text(const std::string& s) const {
    if (opts_.output.empty()) {
      out_ << s;
    } else {
      write_file_atomic(opts_.output, s);
    }
  }
  void table(const Table& t) const { text(opts_.format == "json" ? t.to_json().dump(2) + "\n" : t.to_csv()); }
  void json(const nlohmann::json& j) const { text(j.dump(2) + "\n"); }

 private:
  const Options& opts_;
  std::ostream& out_;
};

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("-o,--output", o.output, "Write to this file (atomically) instead of stdout");
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact counts, bounds and verification sweeps for words by number of distinct symbols",
               "wordstat"};
  app.require_subcommand(1, 1);

  auto* exact = app.add_subcommand("exact", "Exact S(n, j) and a(n, j)");
  exact->add_option("--n", o.n, "Word length (and alphabet size)")->required();
  exact->add_option("--n-max", o.n_max, "Emit every n from --n up to this value");
  exact->add_option("--j", o.j, "Restrict to one value of j");
  add_output(exact, o);

  auto* bounds = app.add_subcommand("bounds", "Exact S(n, j) against every applicable bound, in logs");
  bounds->add_option("--n", o.n)->required();
  bounds->add_option("--j", o.j, "Restrict to one value of j");
  bounds->add_option("--c", o.bender_c, "Saddle-point band constant (>= 1)");
  add_output(bounds, o);

  auto* verify = app.add_subcommand("verify", "Run the verification sweeps and emit a JSON report");
  verify->add_option("--n-max", o.verify_n_max, "Largest n swept");
  verify->add_option("--r0", o.r0, "Lower tail cutoff, 0 < r0 < x0");
  verify->add_option("--r1", o.r1, "Upper tail cutoff, x1 < r1 < 1");
  verify->add_option("--r", o.r, "Central cutoff, 0 < r < 1/2 (default min(r0, 1 - r1))");
  verify->add_option("--epsilon", o.epsilon, "Tail distance from the Poisson point");
  verify->add_option("--suite", o.suites, "Restrict to these suites (repeatable)")
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("-o,--output", o.output);

  auto* figure = app.add_subcommand("figure", "Export the data behind a figure");
  figure->add_option("id", o.figure, "1, 2, 3 or 4")->required()->check(CLI::IsMember({1, 2, 3, 4}));
  add_output(figure, o);

  auto* tail = app.add_subcommand("tail", "Exact tail masses away from the Poisson point");
  tail->add_option("--n", o.ns, "Word lengths (repeatable)")->required();
  tail->add_option("--epsilon", o.epsilon);
  add_output(tail, o);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo law of the number of distinct symbols");
  simulate->add_option("--n", o.n)->required();
  simulate->add_option("--trials", o.trials);
  simulate->add_option("--seed", o.seed);
  add_output(simulate, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  configure_workers_from_env();
  const Emitter emit(o, out);
  try {
    if (exact->parsed()) {
      emit.table(exact_table(o.n, std::max(o.n, o.n_max), o.j));
    } else if (bounds->parsed()) {
      const Table t = o.j > 0 ? bounds_table(o.n, o.j, o.j, o.bender_c) : bounds_table(o.n, 1, o.n, o.bender_c);
      emit.table(t);
      for (const auto& row : t.rows()) {
        for (std::size_t k = 11; k <= 14; ++k) {
          if (const auto* s = std::get_if<std::string>(&row[k]); s && *s == "fail") return kExitViolations;
        }
      }
    } else if (verify->parsed()) {
      VerifyOptions v;
      v.config = TheoremConfig::make(o.r0, o.r1, o.r);
      v.n_max = o.verify_n_max;
      v.epsilon = o.epsilon;
      v.suites = o.suites;
      if (!(v.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
      const VerificationReport rep = run_verification(v);
      emit.json(report_json(rep));
      if (rep.violation_count() > 0) return kExitViolations;
    } else if (figure->parsed()) {
      switch (o.figure) {
        case 1: emit.table(figure1_table()); break;
        case 2: emit.table(figure2_table()); break;
        case 3: emit.table(figure3_table()); break;
        default: emit.table(figure4_table()); break;
      }
    } else if (tail->parsed()) {
      emit.table(tail_table(o.ns, o.epsilon));
    } else if (simulate->parsed()) {
      if (o.n < 1 || o.n > 300) throw std::invalid_argument("simulate: n must lie in [1, 300]");
      if (o.trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
      const EmpiricalLaw law = empirical_distinct_law(o.n, o.trials, o.seed, Exec::parallel);
      if (o.format == "json") {
        emit.json({{"n", law.n},
                   {"trials", law.trials},
                   {"seed", law.seed},
                   {"mean_chi0", law.mean_chi0()},
                   {"stderr_chi0", law.stderr_chi0()},
                   {"expected_chi0", expected_chi0(law.n)},
                   {"tv_distance", tv_distance_to_exact(law)},
                   {"rows", simulate_table(law).to_json()}});
      } else {
        emit.table(simulate_table(law));
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace wordstat
