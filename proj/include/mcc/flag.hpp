#pragma once
// Schubert cells of partial flag varieties: weight functions, fixed-point
// restrictions and the axiom checker.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcc/polytope.hpp"
#include "mcc/rational.hpp"

namespace mcc {

/// mu = (mu_1, ..., mu_N), all parts positive.
class FlagShape {
 public:
  explicit FlagShape(std::vector<int> mu);
  static FlagShape parse(std::string_view text);  // "2,2"

  const std::vector<int>& parts() const { return mu_; }
  int levels() const { return static_cast<int>(mu_.size()); }  // N
  int n() const { return cumulative(levels()); }
  /// mu^{(j)}, with mu^{(0)} = 0.
  int cumulative(int j) const;
  std::string to_string() const;

  friend bool operator==(const FlagShape&, const FlagShape&) = default;

 private:
  std::vector<int> mu_;
};

/// I = (I_1, ..., I_N), an ordered set partition of {1..n}. Elements are
/// 1-based and each block is sorted.
class CompositionIndex {
 public:
  CompositionIndex() = default;
  CompositionIndex(const FlagShape& shape, std::vector<std::vector<int>> blocks);
  static CompositionIndex parse(const FlagShape& shape, std::string_view text);  // "1,3/2,4"

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  /// I^{(j)} = I_1 u ... u I_j, sorted; j in 1..N.
  std::vector<int> cumulative(int j) const;
  /// Level (0-based block) containing element e.
  int block_of(int e) const;
  std::string to_string() const;  // "1,3/2,4"

  friend bool operator==(const CompositionIndex&, const CompositionIndex&) = default;
  friend auto operator<=>(const CompositionIndex&, const CompositionIndex&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

/// All indices of the shape, ordered lexicographically by the word
/// (block of 1, block of 2, ..., block of n).
std::vector<CompositionIndex> enumerate_indices(const FlagShape& shape);

/// Variables for Fl_mu: alpha^{(j)}_a for j < N (one symmetrization block per
/// level), then beta_1..beta_n. With N = 2 the alphas are a1, a2, ...;
/// otherwise a<j>_<a>. Betas are b1..bn.
TablePtr flag_table(const FlagShape& shape);
/// beta_1..beta_n only: the ring at a fixed point.
TablePtr beta_table(int n);

struct FlagWeightFunction {
  RationalExpression u;
  RationalExpression w;
  RationalExpression w_tilde;
};

/// U_I, W_I = Sym U_I and W~_I = W_I / e_mu over flag_table(shape).
FlagWeightFunction weight_function_flag(const FlagShape& shape, const CompositionIndex& index);

/// The substitution alpha^{(j)}_a -> beta_{j^{(j)}_a} at the fixed point J,
/// as images of the variables of flag_table.
std::vector<Monomial> restriction_images(const FlagShape& shape, const CompositionIndex& j);

/// r_J(expr) over beta_table(n). Throws NonCancellingDenominator if the result
/// is not a Laurent polynomial, std::invalid_argument if expr is not symmetric
/// in each alpha block (checked when `check_symmetry`).
LaurentPolynomial restrict(const FlagShape& shape, const RationalExpression& expr, const CompositionIndex& j,
                           bool check_symmetry = true);

struct FixedPointClass {
  FlagShape shape;
  std::vector<CompositionIndex> points;       // enumerate_indices order
  std::vector<LaurentPolynomial> restrictions;  // over beta_table(n)

  const LaurentPolynomial& at(const CompositionIndex& j) const;
};

enum class Route { lazy, expanded };

/// The class of the cell Omega_I by its restrictions to every fixed point.
/// The lazy route restricts the symmetrized terms one by one before
/// summing; the expanded route builds W~_I first.
FixedPointClass mc_schubert(const FlagShape& shape, const CompositionIndex& index, Route route = Route::lazy);

struct TangentData {
  std::vector<Monomial> cell_tangent;
  std::vector<Monomial> cell_normal;
  std::vector<Monomial> ambient_tangent;
};

/// Tangent weights at x_J over beta_table(n): beta_b/beta_a for a in J_j,
/// b in J_k, j < k; normal when a > b, tangent to the cell when a < b.
TangentData fixed_point_weights(const FlagShape& shape, const CompositionIndex& j);

/// codim Omega_I = #{(a, b): a > b, a in I_j, b in I_k, j < k}.
int codimension(const CompositionIndex& index);

struct AxiomEntry {
  CompositionIndex theta;
  std::optional<bool> normalization;  // only at theta == omega
  bool divisible = false;
  bool newton = false;    // vacuous (true) at theta == omega
  bool positive = false;  // positivity of the normal representation
  /// Direction witnessing positivity (absent for an empty normal space).
  std::optional<std::vector<int>> positivity_witness;
  /// A point of the quotient's Newton polytope outside the allowed region.
  std::optional<std::vector<int>> newton_violation;
  bool passed() const { return normalization.value_or(true) && divisible && newton && positive; }
};

struct AxiomReport {
  CompositionIndex omega;
  std::vector<AxiomEntry> entries;
  bool passed() const;
};

/// Checks normalization, divisibility and the Newton polytope condition for
/// cls as a candidate for the class of Omega, at every fixed point.
AxiomReport check_axioms(const FixedPointClass& cls, const CompositionIndex& omega);
/// The entry of check_axioms at cls.points[point] alone (entries are local).
AxiomEntry check_axioms_at(const FixedPointClass& cls, const CompositionIndex& omega, std::size_t point);

/// Whether the tuple is a genuine equivariant class: for every pair of fixed
/// points that differ by the transposition of a and b, the restrictions agree
/// modulo 1 - beta_a/beta_b.
bool satisfies_gkm(const FixedPointClass& cls);

struct UniquenessResult {
  std::size_t candidates = 0;  // tuples enumerated
  std::size_t solutions = 0;   // tuples passing the axioms and GKM
  bool unique_and_matches = false;
};

/// Exhaustive search over restriction tuples supported on the lattice points
/// of N(lambda_y(T*) lambda_{-1}(nu*)) at each fixed point, with coefficients
/// drawn from the coefficients of mc_schubert(omega), their negatives and 0.
UniquenessResult uniqueness_search(const FlagShape& shape, const CompositionIndex& omega);

}  // namespace mcc
