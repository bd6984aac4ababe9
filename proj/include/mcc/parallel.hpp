#pragma once
// Deterministic fan-out helpers. Results are always returned in index order,
// so reductions over them do not depend on the worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace mcc {

/// Worker count used by library fan-outs. Defaults to MCC_THREADS if set,
/// otherwise 1.
std::size_t thread_count();
void set_thread_count(std::size_t n);

namespace detail {
// Set inside worker threads; nested fan-outs then run inline.
inline thread_local bool in_worker = false;
}  // namespace detail

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  const std::size_t workers = detail::in_worker ? 1 : std::min(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      detail::in_worker = true;
      try {
        for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

/// Sums fn(0..count-1) left to right.
template <typename T, typename Fn>
T parallel_sum(std::size_t count, T zero, Fn&& fn) {
  auto parts = parallel_map<T>(count, std::forward<Fn>(fn));
  for (auto& p : parts) zero += p;
  return zero;
}

}  // namespace mcc
