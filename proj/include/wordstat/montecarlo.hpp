#ifndef WORDSTAT_MONTECARLO_HPP
#define WORDSTAT_MONTECARLO_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wordstat/exec.hpp"

namespace wordstat {

/// The generator behind every sample: 64-bit Mersenne Twister, whose output
/// sequence is fixed by the C++ standard and therefore portable.
using WordRng = std::mt19937_64;

/// Uniform draw from {0, ..., n-1} by rejection, free of modulo bias.
std::uint64_t uniform_below(WordRng& rng, std::uint64_t n);

/// SplitMix64 finalizer; used to derive independent block seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial block b under master seed s: splitmix64(s ^ splitmix64(b + 1)).
std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block);

/// Trials per independently seeded block. Fixed, so results do not depend on
/// the number of workers.
inline constexpr long kTrialsPerBlock = 1024;

struct OccupancySample {
  int n = 0;
  std::vector<int> chi;  ///< chi[i] = symbols used exactly i times, i = 0..n
  int distinct = 0;      ///< n - chi[0]
};

/// One uniform word of length n over n symbols, tallied by occupancy.
OccupancySample sample_word(int n, WordRng& rng);

struct EmpiricalLaw {
  int n = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<long> histogram;  ///< histogram[j], j = 0..n; entry 0 is always 0

  double probability(int j) const;
  double mean_distinct() const;
  double mean_chi0() const;
  /// Standard error of mean_chi0 from the sample variance.
  double stderr_chi0() const;
  int mode() const;
};

EmpiricalLaw empirical_distinct_law(int n, long trials, std::uint64_t seed,
                                    Exec exec = Exec::serial);

/// a(n, j) / n^n for j = 0..n. Requires 1 <= n <= 300.
std::vector<double> exact_distinct_law(int n);

/// Half the L1 distance between the empirical and exact laws. Requires n <= 300.
double tv_distance_to_exact(const EmpiricalLaw& law);

/// n (1 - 1/n)^n, the exact mean of chi[0].
double expected_chi0(int n);

}  // namespace wordstat

#endif  // WORDSTAT_MONTECARLO_HPP
