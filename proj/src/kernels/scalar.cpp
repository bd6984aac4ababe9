#include "mcc/kernels.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace mcc::kernels {
namespace {

bool add_scalar(const Exponents& a, const Exponents& b, Exponents& out) {
  bool ok = true;
  for (std::size_t i = 0; i < kLanes; ++i) {
    const std::int32_t s = std::int32_t{a.lane[i]} + std::int32_t{b.lane[i]};
    ok &= s >= std::numeric_limits<std::int16_t>::min() &&
          s <= std::numeric_limits<std::int16_t>::max();
    out.lane[i] = static_cast<std::int16_t>(s);
  }
  return ok;
}

std::int32_t degree_scalar(const Exponents& a) {
  std::int32_t d = 0;
  for (std::size_t i = 0; i < kYLane; ++i) d += a.lane[i];
  return d;
}

int compare_scalar(const Exponents& a, const Exponents& b) {
  const std::int32_t da = degree_scalar(a);
  const std::int32_t db = degree_scalar(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < kLanes; ++i) {
    if (a.lane[i] != b.lane[i]) return a.lane[i] < b.lane[i] ? -1 : 1;
  }
  return 0;
}

bool equal_scalar(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kLanes; ++i) {
    if (a.lane[i] != b.lane[i]) return false;
  }
  return true;
}

const KernelTable kScalar{"scalar", add_scalar, compare_scalar, equal_scalar,
                          degree_scalar};

const KernelTable* choose() {
  if (const char* env = std::getenv("MCC_SIMD"); env && std::string(env) == "scalar") {
    return &kScalar;
  }
  if (const KernelTable* t = avx2()) return t;
  return &kScalar;
}

const KernelTable*& slot() {
  static const KernelTable* table = choose();
  return table;
}

}  // namespace

const KernelTable& scalar() { return kScalar; }

const KernelTable& active() { return *slot(); }

void set_active(const KernelTable& table) { slot() = &table; }

}  // namespace mcc::kernels
