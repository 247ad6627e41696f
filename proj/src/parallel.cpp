#include "icsi/parallel.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace icsi {

void set_worker_count(std::size_t workers) { omp_set_num_threads(workers == 0 ? 1 : static_cast<int>(workers)); }

std::size_t worker_count() { return static_cast<std::size_t>(omp_get_max_threads()); }

std::size_t configure_workers_from_env() {
  if (const char* raw = std::getenv("ICSI_SEC_THREADS")) {
    std::size_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec == std::errc() && ptr == end && value > 0) set_worker_count(value);
  }
  return worker_count();
}

}  // namespace icsi
