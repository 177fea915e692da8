#include "tiergraph/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace tiergraph {

namespace {
std::atomic<int> g_workers{0};

int env_default() {
  if (const char* s = std::getenv("TIERGRAPH_THREADS")) {
    const int n = std::atoi(s);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}
}  // namespace

int worker_count() {
  const int n = g_workers.load(std::memory_order_relaxed);
  if (n > 0) return n;
  static const int def = env_default();
  return def;
}

void set_worker_count(int n) { g_workers.store(n > 0 ? n : 0, std::memory_order_relaxed); }

}  // namespace tiergraph
