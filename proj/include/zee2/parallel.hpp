#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace zee2 {

/// Thread count resolution: explicit value if positive, else the
/// ZEE2_THREADS environment variable, else 1.
int resolve_thread_count(int requested);

/// Splits [begin, end) into contiguous chunks and runs fn(chunk_begin,
/// chunk_end) on each, possibly concurrently. fn must not touch shared
/// mutable state; merge results per chunk index for determinism.
template <class Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, int threads, Fn&& fn) {
  const std::uint64_t total = end - begin;
  if (threads <= 1 || total < 2) {
    fn(0, begin, end);
    return;
  }
  const int parts = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(parts));
  const std::uint64_t chunk = (total + parts - 1) / parts;
  for (int i = 0; i < parts; ++i) {
    const std::uint64_t lo = begin + chunk * static_cast<std::uint64_t>(i);
    const std::uint64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([i, lo, hi, &fn] { fn(i, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

/// All-of reduction over [begin, end): pred(i) for every index. The first
/// failing index of the lowest-numbered failing chunk is reported, so the
/// witness does not depend on the thread count.
template <class Pred>
bool parallel_all(std::uint64_t begin, std::uint64_t end, int threads, Pred&& pred,
                  std::uint64_t* witness = nullptr) {
  const int parts = resolve_thread_count(threads);
  std::vector<std::int64_t> fail(static_cast<std::size_t>(std::max(parts, 1)), -1);
  parallel_chunks(begin, end, parts, [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i)
      if (!pred(i)) {
        fail[static_cast<std::size_t>(chunk)] = static_cast<std::int64_t>(i);
        return;
      }
  });
  for (std::int64_t f : fail)
    if (f >= 0) {
      if (witness) *witness = static_cast<std::uint64_t>(f);
      return false;
    }
  return true;
}

}  // namespace zee2
