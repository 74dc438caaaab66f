#pragma once

#include <cstddef>
#include <exception>

namespace fialg {

// Loop driver selection for the data-parallel kernels. `serial` is the plain
// reference loop; `parallel` distributes the outer index over OpenMP threads.
// Both produce identical results: each index writes only its own slot.
enum class Exec { serial, parallel };

// Applies FIALG_THREADS (if set to a positive integer) to the OpenMP runtime.
// Returns the thread count in effect afterwards.
int configure_threads_from_env();

int max_threads();

template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::parallel && n > 1) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(fialg_kernel_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace fialg
