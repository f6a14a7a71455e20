#include "emlab/common.hpp"

#include <atomic>

namespace emlab {
namespace {

std::atomic<int> g_worker_threads{1};

}  // namespace

int worker_threads() { return g_worker_threads.load(std::memory_order_relaxed); }

void set_worker_threads(int n) {
  require(n >= 1, "set_worker_threads: need at least one thread");
  g_worker_threads.store(n, std::memory_order_relaxed);
}

}  // namespace emlab
