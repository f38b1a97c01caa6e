#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace pclab {

// Worker count for block-parallel loops. The block decomposition below is a
// function of the problem size only, never of the worker count, so computed
// values are bitwise identical whether this is 1 or 64.
int worker_threads();
void set_worker_threads(int n);

// Split [0, n) into fixed-size blocks and run body(begin, end, slot) once per
// block, each block writing only its own result slot. Blocks may execute
// concurrently; the caller folds the slots in index order afterwards, which
// pins the reduction order.
template <class T, class Body>
std::vector<T> map_blocks(std::uint64_t n, std::uint64_t block_size, Body body) {
  if (block_size == 0) block_size = 1;
  const std::uint64_t nblocks = n == 0 ? 0 : (n + block_size - 1) / block_size;
  std::vector<T> slots(nblocks);
  auto run_block = [&](std::uint64_t b) {
    const std::uint64_t lo = b * block_size;
    const std::uint64_t hi = std::min<std::uint64_t>(n, lo + block_size);
    body(lo, hi, slots[b]);
  };
  const int nt = worker_threads();
  if (nt <= 1 || nblocks <= 1) {
    for (std::uint64_t b = 0; b < nblocks; ++b) run_block(b);
    return slots;
  }
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= nblocks) return;
      run_block(b);
    }
  };
  std::vector<std::thread> pool;
  const int helpers = std::min<int>(nt, static_cast<int>(nblocks)) - 1;
  pool.reserve(helpers);
  for (int i = 0; i < helpers; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return slots;
}

}  // namespace pclab
