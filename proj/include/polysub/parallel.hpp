#ifndef POLYSUB_PARALLEL_HPP
#define POLYSUB_PARALLEL_HPP

// Deterministic helper for embarrassingly parallel index loops: workers fill
// disjoint slots of a preallocated result vector, so the outcome never
// depends on the worker count.

#include <cstddef>
#include <thread>
#include <vector>

namespace polysub {

template <typename Fn>
inline void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += nw) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace polysub

#endif  // POLYSUB_PARALLEL_HPP
