#pragma once
// Lattice polytopes for Newton-polytope arguments. All predicates are exact.

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mcc/rational.hpp"

namespace mcc {

using LatticePoint = std::vector<int>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Convex hull of finitely many lattice points. The empty generator set is
/// the empty polytope, which is distinct from {origin}.
class ConvexPolytope {
 public:
  explicit ConvexPolytope(std::size_t dim = 0);
  ConvexPolytope(std::size_t dim, std::vector<LatticePoint> generators);

  std::size_t dim() const { return dim_; }
  bool is_empty() const { return generators_.empty(); }
  /// Distinct generators in lexicographic order.
  const std::vector<LatticePoint>& generators() const { return generators_; }
  /// Generators that are not convex combinations of the others, in
  /// lexicographic order. Computed once and cached (thread-safe).
  const std::vector<LatticePoint>& vertices() const;

  /// Same point set.
  friend bool operator==(const ConvexPolytope& a, const ConvexPolytope& b);

 private:
  struct Cache;
  std::size_t dim_;
  std::vector<LatticePoint> generators_;
  std::shared_ptr<Cache> cache_;
};

ConvexPolytope newton_polytope(const LaurentPolynomial& p);

/// pt in conv(P), decided by exact LP feasibility.
bool member(std::span<const int> pt, const ConvexPolytope& p);

/// inner is a subset of outer (every generator of inner is a member).
bool contains(const ConvexPolytope& outer, const ConvexPolytope& inner);

ConvexPolytope minkowski(const ConvexPolytope& u, const ConvexPolytope& v);

/// pi_s(P) = [min, max] of s.x over P; nullopt for the empty polytope.
std::optional<std::pair<long, long>> project(const ConvexPolytope& p, std::span<const int> s);

/// N(numerator) inside N(denominator). The denominator polytope is assembled
/// as the Minkowski sum of the factor polytopes.
bool is_n_small(const RationalExpression& h);

/// inner is inside outer and avoids the origin: inner inside outer minus {0}.
bool punctured_containment(const ConvexPolytope& inner, const ConvexPolytope& outer);

struct PositivityResult {
  bool positive = false;
  /// Integer direction s with s.w >= 1 for every weight w (set iff positive).
  std::optional<std::vector<int>> witness;
};

/// Whether the origin lies outside the convex hull of the weights.
PositivityResult is_positive(std::span<const Monomial> weights, std::size_t dim);

struct LimitValue {
  bool finite = false;
  /// The limit is numerator/denominator in Q(y); denominator is positive-leading
  /// and the fraction is reduced when the division is exact over Z[y].
  YPoly numerator;
  YPoly denominator{1};
};

/// lim_{xi -> infinity} of a one-variable rational expression in xi with
/// Z[y] coefficients, by comparing leading xi-degrees.
LimitValue limit_at_infinity(const RationalExpression& h);

}  // namespace mcc
