#pragma once

#include <cstddef>

namespace icsi {

/// Worker count used by the OpenMP kernels.
void set_worker_count(std::size_t workers);
std::size_t worker_count();

/// Applies ICSI_SEC_THREADS when set to a positive integer; otherwise leaves
/// the OpenMP default (all cores). Returns the resulting worker count.
std::size_t configure_workers_from_env();

}  // namespace icsi
