#ifndef WORDSTAT_CLI_HPP
#define WORDSTAT_CLI_HPP

#include <iosfwd>
#include <span>

#include <json.hpp>

#include "wordstat/format.hpp"
#include "wordstat/montecarlo.hpp"
#include "wordstat/verifier.hpp"

namespace wordstat {

/// Process exit codes. Nothing else is ever returned.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the wordstat executable. Writes results to `out`
/// unless -o is given, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Table builders shared by the subcommands and the tests.

/// n, j, S_n_j, a_n_j, log_norm_a, nth_root_a_over_n for n in [n_lo, n_hi],
/// every j in [1, n] (or just j_only when it is positive).
Table exact_table(int n_lo, int n_hi, int j_only = 0);

/// Exact S with every applicable bound, in logs, for j in [j_lo, j_hi].
Table bounds_table(int n, int j_lo, int j_hi, double bender_c = 1.1);

/// Points j = 0, 5, ..., 200 at n = 200: j, x, nth_root_a_over_n, phi.
Table figure1_table();
/// psi and mu on x = k/200, k = 1..199, long form: function, x, value.
Table figure2_table();
/// n = 100, j = 1..100: exact normalized S and the four bound curves, each
/// left empty outside the range where it is a valid upper bound.
Table figure3_table();
/// nu and varphi on x = k/200, k = 0..200, long form.
Table figure4_table();

Table tail_table(std::span<const int> ns, double epsilon);
Table simulate_table(const EmpiricalLaw& law);

nlohmann::json report_json(const VerificationReport& report);

}  // namespace wordstat

#endif  // WORDSTAT_CLI_HPP
