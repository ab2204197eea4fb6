#pragma once

#include <vector>

#include "nervecheck/fields.hpp"
#include "nervecheck/simplicial_complex.hpp"
#include "nervecheck/snf.hpp"

namespace nervecheck {

/// Finitely generated abelian group Z^free_rank + sum of Z/t_i, with the
/// torsion coefficients t_i > 1 forming a divisibility chain.  Over a field
/// the torsion list is empty and free_rank is the dimension.
struct HomologyGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& other) const
    {
        return free_rank == other.free_rank && torsion == other.torsion;
    }
    bool operator!=(const HomologyGroup& other) const { return !(*this == other); }
};

/// Chain complex of free Z-modules in degrees 0..top with integer boundary
/// matrices d[n] : C_n -> C_{n-1} for 1 <= n <= top.  d[0] is unused and
/// kept as a 0 x dims[0] placeholder so that indices match degrees.
struct ChainComplexZ {
    std::vector<int> dims;
    std::vector<IntMatrix> d;

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    int dim_at(int n) const
    {
        return (n < 0 || n > top_degree()) ? 0 : dims[n];
    }
    const IntMatrix& boundary(int n) const { return d[n]; }

    /// True when every composite d[n] * d[n+1] vanishes.
    bool composites_zero() const;
};

/// Boundary matrix of K in degree q: rows are (q-1)-simplices, columns are
/// q-simplices, both in lexicographic order; the column of t has entry
/// (-1)^j in the row of its j-th face.  With augmented = true and q = 0 the
/// result is the 1 x n_0 all-ones augmentation.
IntMatrix boundary_matrix(const SimplicialComplex& k, int q, bool augmented = false);

/// Chain complex of K in degrees 0..max(dim K, 0).
ChainComplexZ chain_complex(const SimplicialComplex& k);

/// Homology of a chain complex in degrees 0..top.  Over Z the free rank is
/// nullity(d_n) - rank(d_{n+1}) computed rationally and the torsion
/// coefficients are the invariant factors of d_{n+1} exceeding 1; this is
/// valid because ker d_n is a direct summand containing im d_{n+1}.  Over a
/// field the same rank computation runs in that field and torsion is empty.
std::vector<HomologyGroup> homology(const ChainComplexZ& cc, const CoefficientSpec& coeff);

/// Simplicial homology of K in degrees 0..dim K (empty list for the empty
/// complex).  With reduced = true the degree-0 group is computed against the
/// augmentation map; higher degrees are unchanged.
std::vector<HomologyGroup> homology(const SimplicialComplex& k, const CoefficientSpec& coeff,
                                    bool reduced = false);

/// True when the reduced integral homology of K vanishes in degrees
/// 0..up_to.  Throws std::invalid_argument on the empty complex: emptiness
/// is a cover defect the caller must handle, not a triviality answer.
bool is_homologically_trivial(const SimplicialComplex& k, int up_to);

/// Zero-padded lookup; degree may exceed the list length.
HomologyGroup group_at(const std::vector<HomologyGroup>& groups, int degree);

/// Degreewise equality of homology lists, treating absent degrees as zero
/// (lists of different lengths can still describe identical homology).
bool homology_equal(const std::vector<HomologyGroup>& a, const std::vector<HomologyGroup>& b);

}  // namespace nervecheck
