#pragma once

#include <vector>

#include "nervecheck/fields.hpp"

namespace nervecheck {

/// Linear subspace of F^n for F the rationals or a prime field, stored as a
/// canonical reduced-echelon basis with integer entries.  All operations are
/// exact; two Subspace objects over the same field and ambient dimension are
/// equal iff their bases are identical vectors.
///
/// Membership tests reduce to a check matrix: v lies in S iff K v = 0 where
/// the rows of K span the kernel of S's basis matrix.  Intersections stack
/// two check matrices and take the kernel of the combined system; preimages
/// compose the check matrix with the map.
class Subspace {
public:
    static Subspace zero(const CoefficientSpec& field, int ambient);
    static Subspace full(const CoefficientSpec& field, int ambient);
    static Subspace span(const CoefficientSpec& field, int ambient, const DenseInt& vectors);

    /// Span of the unit vectors e_i for i in indices.
    static Subspace coordinate(const CoefficientSpec& field, int ambient,
                               const std::vector<int>& indices);

    int dim() const { return static_cast<int>(basis_.size()); }
    int ambient() const { return ambient_; }
    const CoefficientSpec& field() const { return field_; }
    const DenseInt& basis() const { return basis_; }

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool contains(const std::vector<Int>& v) const;
    bool operator==(const Subspace& other) const;

    /// Image { M b : b in this } in F^rows(M); ambient must equal cols(M).
    Subspace image_under(const IntMatrix& m) const;

    /// Preimage { x : M x in this } in F^cols(M); ambient must equal rows(M).
    Subspace preimage_under(const IntMatrix& m) const;

private:
    Subspace(CoefficientSpec field, int ambient, DenseInt basis);
    void require_compatible(const Subspace& other) const;

    /// Rows of a matrix K with S = { v : K v = 0 }.
    DenseInt check_rows() const;

    CoefficientSpec field_;
    int ambient_;
    DenseInt basis_;
};

}  // namespace nervecheck
