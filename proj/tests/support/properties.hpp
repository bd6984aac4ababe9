#pragma once
// Seeded randomized property suites. Each runner returns the number of cases
// tried and the first counterexample, if any; the doctest suites and the
// acceptance binary both drive them.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcc/polytope.hpp"
#include "mcc/rational.hpp"

namespace mcc::testkit {

struct PropertyOutcome {
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
  bool passed() const { return !counterexample.has_value(); }
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2024'0001ULL;
inline constexpr std::size_t kDefaultCases = 200;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  YPoly ypoly(int max_degree = 2, int bound = 3);
  YPoly nonzero_ypoly(int max_degree = 2, int bound = 3);
  Monomial monomial(std::size_t arity, int bound = 2);
  LaurentPolynomial poly(const TablePtr& t, int max_terms = 4, int exp_bound = 2);
  LaurentPolynomial nonzero_poly(const TablePtr& t, int max_terms = 4, int exp_bound = 2);
  /// 1 - m or 1 + y m with a random non-trivial monomial m.
  LaurentPolynomial binomial(const TablePtr& t, int exp_bound = 2);
  ConvexPolytope polytope(std::size_t dim, int max_points = 4, int bound = 3);
  std::vector<int> direction(std::size_t dim, int bound = 4);

 private:
  std::mt19937_64 rng_;
};

PropertyOutcome ring_axioms(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases);
PropertyOutcome exact_division(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases);
PropertyOutcome toric_homomorphism(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases);
PropertyOutcome symmetrize_invariance(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases);
PropertyOutcome cancellation_law(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases);
PropertyOutcome minkowski_multiplicativity(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases);
PropertyOutcome n_small_closure(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases);
PropertyOutcome projection_compatibility(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases);
PropertyOutcome positivity_limit(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases);
PropertyOutcome serialization_roundtrip(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases);
/// Library fan-outs give byte-identical results with 1 and `workers` threads.
PropertyOutcome thread_determinism(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases,
                                   std::size_t workers = 4);

}  // namespace mcc::testkit
