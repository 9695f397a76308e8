#include "wordstat/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wordstat/bigcomb.hpp"

namespace wordstat {

std::uint64_t uniform_below(WordRng& rng, std::uint64_t n) {
  // Accept only draws below the largest multiple of n that fits.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  return splitmix64(seed ^ splitmix64(block + 1));
}

namespace {

// Tallies one word into counts[] (size n, zeroed on entry) and returns the
// number of distinct symbols.
int draw_distinct(int n, WordRng& rng, std::vector<int>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  int distinct = 0;
  for (int i = 0; i < n; ++i) {
    if (counts[uniform_below(rng, static_cast<std::uint64_t>(n))]++ == 0) ++distinct;
  }
  return distinct;
}

}  // namespace

OccupancySample sample_word(int n, WordRng& rng) {
  if (n < 1) throw std::invalid_argument("sample_word: n must be >= 1");
  std::vector<int> counts(static_cast<std::size_t>(n));
  OccupancySample s;
  s.n = n;
  s.distinct = draw_distinct(n, rng, counts);
  s.chi.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const int c : counts) ++s.chi[c];
  return s;
}

EmpiricalLaw empirical_distinct_law(int n, long trials, std::uint64_t seed, Exec exec) {
  if (n < 1) throw std::invalid_argument("empirical_distinct_law: n must be >= 1");
  if (trials < 1) throw std::invalid_argument("empirical_distinct_law: trials must be >= 1");
  const long blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  std::vector<long> per_block(static_cast<std::size_t>(blocks) * width, 0);

  const bool par = exec == Exec::parallel;
#pragma omp parallel if (par)
  {
    std::vector<int> counts(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (long b = 0; b < blocks; ++b) {
      WordRng rng(block_seed(seed, static_cast<std::uint64_t>(b)));
      const long count = std::min(kTrialsPerBlock, trials - b * kTrialsPerBlock);
      long* hist = per_block.data() + b * width;
      for (long t = 0; t < count; ++t) ++hist[draw_distinct(n, rng, counts)];
    }
  }

  EmpiricalLaw law;
  law.n = n;
  law.trials = trials;
  law.seed = seed;
  law.histogram.assign(width, 0);
  for (long b = 0; b < blocks; ++b) {
    for (std::size_t j = 0; j < width; ++j) law.histogram[j] += per_block[b * width + j];
  }
  return law;
}

double EmpiricalLaw::probability(int j) const {
  return static_cast<double>(histogram.at(j)) / static_cast<double>(trials);
}

double EmpiricalLaw::mean_distinct() const {
  double s = 0;
  for (std::size_t j = 0; j < histogram.size(); ++j) s += static_cast<double>(j) * histogram[j];
  return s / static_cast<double>(trials);
}

double EmpiricalLaw::mean_chi0() const { return n - mean_distinct(); }

double EmpiricalLaw::stderr_chi0() const {
  if (trials < 2) return std::numeric_limits<double>::infinity();
  const double m = mean_distinct();
  double ss = 0;
  for (std::size_t j = 0; j < histogram.size(); ++j) {
    const double d = static_cast<double>(j) - m;
    ss += d * d * histogram[j];
  }
  const double var = ss / static_cast<double>(trials - 1);
  return std::sqrt(var / static_cast<double>(trials));
}

int EmpiricalLaw::mode() const {
  return static_cast<int>(std::max_element(histogram.begin(), histogram.end()) - histogram.begin());
}

std::vector<double> exact_distinct_law(int n) {
  if (n < 1 || n > 300) throw std::invalid_argument("exact law: n must lie in [1, 300]");
  const std::vector<BigInt> row = stirling2_row(n);
  const BigInt nn = power(n, n);
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  BigInt falling = n;  // n!/(n-j)!
  for (int j = 1; j <= n; ++j) {
    p[j] = std::exp(log_ratio(falling * row[j], nn));
    falling *= n - j;
  }
  return p;
}

double tv_distance_to_exact(const EmpiricalLaw& law) {
  const std::vector<double> p = exact_distinct_law(law.n);
  double s = 0;
  for (int j = 0; j <= law.n; ++j) s += std::abs(law.probability(j) - p[j]);
  return 0.5 * s;
}

double expected_chi0(int n) {
  if (n < 1) throw std::invalid_argument("expected_chi0: n must be >= 1");
  return n * std::exp(n * std::log1p(-1.0 / n));
}

}  // namespace wordstat
