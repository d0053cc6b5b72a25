#ifndef RANK2_PARALLEL_HPP
#define RANK2_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rank2 {

/// Default worker count: the number of hardware threads, at least one.
inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// results[i] = f(i) for i in [0, n), computed on up to `jobs` threads.
/// Output order is independent of scheduling; the first exception thrown
/// by any task (lowest index) is rethrown after all workers finish.
template <class F>
auto parallel_map(std::size_t n, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace rank2

#endif  // RANK2_PARALLEL_HPP
