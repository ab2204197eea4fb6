#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nervecheck/int_matrix.hpp"

namespace nervecheck {

/// Coefficient system for homology computations: the integers, the
/// rationals, or a prime field Z/p.
struct CoefficientSpec {
    enum class Kind { integers, rationals, prime_field };

    Kind kind = Kind::integers;
    std::int64_t p = 0;  // only meaningful for prime_field

    static CoefficientSpec integers() { return {Kind::integers, 0}; }
    static CoefficientSpec rationals() { return {Kind::rationals, 0}; }

    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static CoefficientSpec prime(std::int64_t p);

    bool is_field() const { return kind != Kind::integers; }
    bool operator==(const CoefficientSpec& other) const
    {
        return kind == other.kind && p == other.p;
    }

    /// "z", "q", or "p:<prime>"; the same syntax the command line accepts.
    std::string name() const;
};

using DenseInt = std::vector<std::vector<Int>>;

/// Rank of m over a field.  Throws std::invalid_argument for integer
/// coefficients: rank is a field notion here, use snf for Z-structure.
int rank(const IntMatrix& m, const CoefficientSpec& coeff);

/// Basis of { v : M v = 0 } over the field, as exact integer vectors.
/// Over the rationals each vector is primitive with positive leading entry;
/// over Z/p entries are canonical representatives in [0, p).  The basis is
/// deterministic: it is derived from the reduced echelon form with one
/// vector per free column, in column order.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m, const CoefficientSpec& coeff);

namespace detail {

/// Reduced row echelon form with integer rows.  Over the rationals rows are
/// primitive integer vectors with positive pivots (the unique RREF scaled to
/// integers); over Z/p pivots are 1 and entries lie in [0, p).  Zero rows are
/// dropped, so the result doubles as a canonical basis of the row space.
DenseInt rref_over(DenseInt a, const CoefficientSpec& coeff);

int rank_over(const DenseInt& a, const CoefficientSpec& coeff);

/// Kernel basis of a dense matrix; same normalization as kernel_basis.
DenseInt kernel_over(const DenseInt& a, int cols, const CoefficientSpec& coeff);

DenseInt to_dense(const IntMatrix& m);

}  // namespace detail

}  // namespace nervecheck
