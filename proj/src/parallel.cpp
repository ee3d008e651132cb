#include "spinphase/parallel.hpp"

#include <omp.h>

#include <cstdlib>

namespace spinphase {

int thread_count() {
  static const int cached = [] {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("SPINPHASE_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0 && cap < n) n = cap;
    }
    return n;
  }();
  return cached;
}

}  // namespace spinphase
