#include "wordstat/exec.hpp"

#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace wordstat {

namespace {

int env_threads() {
  const char* s = std::getenv("WORDSTAT_THREADS");
  if (s == nullptr) return 0;
  try {
    const int v = std::stoi(s);
    return v > 0 ? v : 0;
  } catch (...) {
    return 0;
  }
}

}  // namespace

int worker_count() {
  if (const int t = env_threads(); t > 0) return t;
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void configure_workers_from_env() {
#if defined(_OPENMP)
  if (const int t = env_threads(); t > 0) omp_set_num_threads(t);
#endif
}

}  // namespace wordstat
