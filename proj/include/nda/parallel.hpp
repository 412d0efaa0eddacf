#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace nda {

/// How independent work items (chains, points) are scheduled. Both paths
/// produce identical results; `serial` is the reference implementation.
enum class Execution { serial, parallel };

/// Worker count for parallel kernels: NDA_THREADS if set, else the OpenMP default.
int worker_count();

/// Runs body(i) for i in [0, n). Bodies write results to per-index slots;
/// the first exception (lowest index) is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace nda
