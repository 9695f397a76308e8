#ifndef WORDSTAT_EXEC_HPP
#define WORDSTAT_EXEC_HPP

#include <cstdint>

namespace wordstat {

/// Selects between the serial reference kernels and their OpenMP
/// counterparts. Both paths must produce identical results; the serial one
/// is kept as the oracle the parallel one is tested against.
enum class Exec { serial, parallel };

/// Number of workers the parallel kernels will use. Honors the
/// WORDSTAT_THREADS environment variable, otherwise the OpenMP default.
int worker_count();

/// Applies WORDSTAT_THREADS (if set) to the OpenMP runtime.
void configure_workers_from_env();

}  // namespace wordstat

#endif  // WORDSTAT_EXEC_HPP
