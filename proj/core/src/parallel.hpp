#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace linkc::detail {

inline unsigned resolve_threads(unsigned requested, std::size_t items) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (items < n) n = static_cast<unsigned>(std::max<std::size_t>(items, 1));
  return n;
}

// Runs body(state, i) for every i in [0, count). Each worker owns one state
// made by init(); items are handed out in chunks from a shared counter.
template <typename Init, typename Body>
void parallel_for_each(std::size_t count, unsigned threads, Init init, Body body) {
  threads = resolve_threads(threads, count);
  if (threads == 1) {
    auto state = init();
    for (std::size_t i = 0; i < count; ++i) body(state, i);
    return;
  }
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    auto state = init();
    while (true) {
      const std::size_t begin = next.fetch_add(kChunk, std::memory_order_relaxed);
      if (begin >= count) break;
      const std::size_t end = std::min(count, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) body(state, i);
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
}

}  // namespace linkc::detail
