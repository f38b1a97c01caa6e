#include "pclab/parallel.hpp"

namespace pclab {

namespace {
std::atomic<int> g_workers{0};  // 0 = not set yet, use hardware
}

int worker_threads() {
  int n = g_workers.load(std::memory_order_relaxed);
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_worker_threads(int n) { g_workers.store(n < 1 ? 1 : n, std::memory_order_relaxed); }

}  // namespace pclab
