#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace pbsq {

inline int default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Splits [lo, hi] into contiguous chunks, runs fn(chunk_lo, chunk_hi, out)
// on worker threads, and returns the per-chunk results in chunk order so the
// merge is deterministic regardless of scheduling. R must be default
// constructible; fn must only touch its own chunk's output.
template <typename R, typename Fn>
std::vector<R> chunked_run(uint64_t lo, uint64_t hi, int threads, Fn&& fn) {
  std::vector<R> results;
  if (hi < lo) return results;
  uint64_t total = hi - lo + 1;
  uint64_t nchunks = threads <= 1 ? 1 : std::min<uint64_t>(total, static_cast<uint64_t>(threads));
  results.resize(static_cast<size_t>(nchunks));
  if (nchunks == 1) {
    fn(lo, hi, results[0]);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nchunks));
  uint64_t per = total / nchunks;
  uint64_t extra = total % nchunks;
  uint64_t start = lo;
  for (uint64_t c = 0; c < nchunks; ++c) {
    uint64_t len = per + (c < extra ? 1 : 0);
    uint64_t chunk_lo = start;
    uint64_t chunk_hi = start + len - 1;
    start = chunk_hi + 1;
    pool.emplace_back([&fn, chunk_lo, chunk_hi, &results, c] {
      fn(chunk_lo, chunk_hi, results[static_cast<size_t>(c)]);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace pbsq
