#pragma once
// Packed exponent-vector kernels.
//
// Every monomial in the library is a fixed-width vector of 16 signed 16-bit
// lanes: lanes 0..14 hold variable exponents, lane 15 holds the y-degree.
// The hot loops of polynomial arithmetic (exponent addition, term ordering,
// equality) run through a small dispatch table so that a scalar reference
// implementation and a SIMD implementation can be swapped and compared.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace mcc {

inline constexpr std::size_t kLanes = 16;
inline constexpr std::size_t kYLane = 15;
inline constexpr std::size_t kMaxVariables = 15;

struct alignas(32) Exponents {
  std::array<std::int16_t, kLanes> lane{};

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

namespace kernels {

struct KernelTable {
  std::string_view name;
  // out = a + b lane-wise; returns false if any lane overflowed int16.
  bool (*add)(const Exponents& a, const Exponents& b, Exponents& out);
  // Three-way comparison: graded-lex on lanes 0..14 (total degree first, then
  // the first differing lane decides), then lane 15 (y-degree).
  int (*compare)(const Exponents& a, const Exponents& b);
  bool (*equal)(const Exponents& a, const Exponents& b);
  // Sum of lanes 0..14.
  std::int32_t (*degree)(const Exponents& a);
};

const KernelTable& scalar();
// nullptr when the build or the running CPU lacks AVX2.
const KernelTable* avx2();

// The table used by the library. Chosen once at startup: AVX2 if available,
// unless the MCC_SIMD environment variable is set to "scalar".
const KernelTable& active();

// Forces a table (tests and benchmarks). Not thread-safe; call before any
// parallel work starts.
void set_active(const KernelTable& table);

}  // namespace kernels

inline bool operator<(const Exponents& a, const Exponents& b) {
  return kernels::active().compare(a, b) < 0;
}

}  // namespace mcc
