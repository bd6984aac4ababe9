#include "mcc/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define MCC_HAVE_X86 1
#else
#define MCC_HAVE_X86 0
#endif

namespace mcc::kernels {

#if MCC_HAVE_X86
namespace {

#define MCC_AVX2 __attribute__((target("avx2")))

MCC_AVX2 inline __m256i load(const Exponents& a) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(a.lane.data()));
}

MCC_AVX2 bool add_avx2(const Exponents& a, const Exponents& b, Exponents& out) {
  const __m256i va = load(a);
  const __m256i vb = load(b);
  const __m256i wrap = _mm256_add_epi16(va, vb);
  const __m256i sat = _mm256_adds_epi16(va, vb);
  _mm256_store_si256(reinterpret_cast<__m256i*>(out.lane.data()), wrap);
  return _mm256_movemask_epi8(_mm256_cmpeq_epi16(wrap, sat)) == -1;
}

MCC_AVX2 std::int32_t degree_avx2(const Exponents& a) {
  // Weight 1 on variable lanes, 0 on the y lane.
  const __m256i weights = _mm256_setr_epi16(1, 1, 1, 1, 1, 1, 1, 1,
                                            1, 1, 1, 1, 1, 1, 1, 0);
  const __m256i pairs = _mm256_madd_epi16(load(a), weights);
  const __m128i lo = _mm256_castsi256_si128(pairs);
  const __m128i hi = _mm256_extracti128_si256(pairs, 1);
  __m128i s = _mm_add_epi32(lo, hi);
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(s);
}

MCC_AVX2 int compare_avx2(const Exponents& a, const Exponents& b) {
  const std::int32_t da = degree_avx2(a);
  const std::int32_t db = degree_avx2(b);
  if (da != db) return da < db ? -1 : 1;
  const __m256i eq = _mm256_cmpeq_epi16(load(a), load(b));
  const auto diff = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
  if (diff == 0) return 0;
  const unsigned lane = static_cast<unsigned>(__builtin_ctz(diff)) / 2;
  return a.lane[lane] < b.lane[lane] ? -1 : 1;
}

MCC_AVX2 bool equal_avx2(const Exponents& a, const Exponents& b) {
  return _mm256_movemask_epi8(_mm256_cmpeq_epi16(load(a), load(b))) == -1;
}

#undef MCC_AVX2

const KernelTable kAvx2{"avx2", add_avx2, compare_avx2, equal_avx2, degree_avx2};

}  // namespace

const KernelTable* avx2() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

#else

const KernelTable* avx2() { return nullptr; }

#endif

}  // namespace mcc::kernels
