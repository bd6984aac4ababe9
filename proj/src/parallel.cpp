#include "mcc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mcc {

namespace {

std::size_t from_env() {
  if (const char* env = std::getenv("MCC_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n >= 1) return static_cast<std::size_t>(n);
    } catch (...) {
    }
  }
  return 1;
}

std::atomic<std::size_t>& slot() {
  static std::atomic<std::size_t> n{from_env()};
  return n;
}

}  // namespace

std::size_t thread_count() { return slot().load(); }

void set_thread_count(std::size_t n) { slot() = n == 0 ? 1 : n; }

}  // namespace mcc
