#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace lowpoly::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, rows) into contiguous bands, one per worker. Each row is written
// by exactly one worker, so results match sequential evaluation.
template <typename Fn>
void parallel_rows(int rows, unsigned threads, Fn&& fn) {
  const unsigned workers = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max(rows, 1)));
  if (workers <= 1) {
    for (int y = 0; y < rows; ++y) fn(y);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const int begin = static_cast<int>(static_cast<long long>(rows) * w / workers);
    const int end = static_cast<int>(static_cast<long long>(rows) * (w + 1) / workers);
    pool.emplace_back([begin, end, &fn] {
      for (int y = begin; y < end; ++y) fn(y);
    });
  }
}

}  // namespace lowpoly::detail
