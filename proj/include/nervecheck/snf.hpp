#pragma once

#include <vector>

#include "nervecheck/int_matrix.hpp"

namespace nervecheck {

/// Diagonal of the Smith normal form: positive integers d_1 | d_2 | ... | d_r,
/// where r is the rank of the matrix over the rationals.
struct InvariantFactors {
    std::vector<Int> factors;

    bool operator==(const InvariantFactors& other) const { return factors == other.factors; }
};

/// Smith normal form over the integers by elementary row and column
/// operations.  Pivot selection is deterministic: among the nonzero entries
/// of the working submatrix, pick one of minimal absolute value, breaking
/// ties by smallest (row, col) lexicographically.  Each pivot is reduced
/// until it divides every remaining entry, which yields the divisibility
/// chain directly.
InvariantFactors snf(const IntMatrix& m);

}  // namespace nervecheck
