#pragma once
// Exact rational feasibility for small dense systems {x >= 0 : A x = b}.
//
// Phase-one simplex over GMP rationals with Bland's rule, so it always
// terminates and never rounds.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace mcc::lp {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major, rows x cols

/// A nonnegative solution of A x = b if one exists (a basic feasible
/// solution), otherwise nullopt.
std::optional<Vector> find_nonnegative_solution(const Matrix& a, const Vector& b);

}  // namespace mcc::lp
