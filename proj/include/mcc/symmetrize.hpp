#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mcc/rational.hpp"

namespace mcc {

struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every element of S_{b1} x ... x S_{bk} as a permutation of the full
/// variable list (identity outside the blocks), in a fixed order.
std::vector<std::vector<std::size_t>> block_permutations(std::size_t arity, const std::vector<Block>& blocks);

/// Sum of u over all block permutations, denominators cancelled greedily, and
/// the numerator divided exactly by `divisor`. Throws InexactDivision if the
/// numerator is not divisible by `divisor`.
RationalExpression symmetrize(const RationalExpression& u, const std::vector<Block>& blocks,
                              std::int64_t divisor = 1);

std::int64_t factorial(int n);

}  // namespace mcc
