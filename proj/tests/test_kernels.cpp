#include <doctest.h>

#include <random>

#include "mcc/kernels.hpp"
#include "mcc/laurent.hpp"
#include "mcc/serialize.hpp"
#include "support/properties.hpp"

using namespace mcc;

namespace {

Exponents random_exponents(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Exponents e;
  for (auto& l : e.lane) l = static_cast<std::int16_t>(d(rng));
  return e;
}

// Restores the active table on scope exit.
struct ActiveGuard {
  const kernels::KernelTable& saved = kernels::active();
  ~ActiveGuard() { kernels::set_active(saved); }
};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar ordering is graded lex then y") {
    const auto& k = kernels::scalar();
    Exponents a, b;
    a.lane[0] = 1;
    b.lane[1] = 2;
    CHECK(k.compare(a, b) < 0);  // degree 1 < degree 2
    b.lane[1] = 1;
    CHECK(k.compare(a, b) > 0);  // same degree, lane 0 decides
    Exponents c = a;
    c.lane[kYLane] = 1;
    CHECK(k.compare(a, c) < 0);
    CHECK(k.degree(c) == 1);
  }

  TEST_CASE("scalar add detects int16 overflow") {
    Exponents a, b, out;
    a.lane[3] = 32000;
    b.lane[3] = 1000;
    CHECK_FALSE(kernels::scalar().add(a, b, out));
    b.lane[3] = -1000;
    REQUIRE(kernels::scalar().add(a, b, out));
    CHECK(out.lane[3] == 31000);
  }

  TEST_CASE("avx2 matches scalar on random vectors") {
    const auto* simd = kernels::avx2();
    if (!simd) {
      MESSAGE("AVX2 unavailable; equivalence skipped");
      return;
    }
    const auto& ref = kernels::scalar();
    std::mt19937_64 rng(testkit::kDefaultSeed);
    for (int i = 0; i < 2000; ++i) {
      const int bound = i % 4 == 0 ? 32767 : 3;  // near-overflow lanes every fourth case
      const Exponents a = random_exponents(rng, bound);
      Exponents b = random_exponents(rng, bound);
      if (i % 5 == 0) b = a;
      Exponents r1, r2;
      const bool ok1 = ref.add(a, b, r1);
      const bool ok2 = simd->add(a, b, r2);
      REQUIRE(ok1 == ok2);
      if (ok1) CHECK(r1 == r2);
      const int c1 = ref.compare(a, b);
      const int c2 = simd->compare(a, b);
      CHECK((c1 > 0) - (c1 < 0) == (c2 > 0) - (c2 < 0));
      CHECK(ref.equal(a, b) == simd->equal(a, b));
      CHECK(ref.degree(a) == simd->degree(a));
    }
  }

  TEST_CASE("polynomial arithmetic is identical under both tables") {
    const auto* simd = kernels::avx2();
    if (!simd) return;
    ActiveGuard guard;
    const auto t = make_table({"a", "b", "c", "d"});
    testkit::Gen g(7);
    for (int i = 0; i < 200; ++i) {
      const auto p = g.poly(t, 5, 3);
      const auto q = g.poly(t, 5, 3);
      kernels::set_active(kernels::scalar());
      const auto s1 = to_string(p * q + p);
      kernels::set_active(*simd);
      const auto s2 = to_string(p * q + p);
      CHECK(s1 == s2);
    }
  }
}
