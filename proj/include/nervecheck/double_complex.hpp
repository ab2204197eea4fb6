#pragma once

#include <utility>
#include <vector>

#include "nervecheck/cover.hpp"
#include "nervecheck/homology.hpp"

namespace nervecheck {

/// Mayer-Vietoris double complex of a cover: A_{p,q} is the free module on
/// pairs (sigma, tau) with sigma a p-simplex of the nerve and tau a
/// q-simplex of the intersection U_sigma.
///
/// The two differentials follow the commuting convention:
///   d'  (sigma, tau) = sum_i (-1)^i (sigma with vertex i removed, tau)
///   d'' (sigma, tau) = sum_j (-1)^j (sigma, tau with vertex j removed)
/// so d'd'' = d''d' and the total differential d' + (-1)^p d'' squares to
/// zero.  Bases are ordered (sigma, tau) lexicographically, which pins every
/// matrix down uniquely.
struct DoubleComplex {
    int p_max = 0;
    int q_max = 0;
    std::vector<std::vector<Simplex>> nerve_simplices;  // [p], ordered
    std::vector<std::vector<std::vector<std::pair<Simplex, Simplex>>>> basis;  // [p][q]
    std::vector<std::vector<IntMatrix>> d_prime;   // [p][q] : A_{p,q} -> A_{p-1,q}
    std::vector<std::vector<IntMatrix>> d_dprime;  // [p][q] : A_{p,q} -> A_{p,q-1}

    int dim(int p, int q) const
    {
        if (p < 0 || p > p_max || q < 0 || q > q_max)
            return 0;
        return static_cast<int>(basis[p][q].size());
    }
};

/// Builds the grid for 0 <= p <= p_max, 0 <= q <= q_max.
DoubleComplex build_double_complex(const Cover& cover, int p_max, int q_max);

/// Verifies d'd' = 0, d''d'' = 0 and the commuting identity d'd'' = d''d'
/// on every square of the grid.
bool check_bicomplex(const DoubleComplex& dc);

/// Total complex T_n = direct sum of A_{p,n-p}, blocks ordered by increasing
/// p, with differential d' + (-1)^p d''.  Throws std::invalid_argument when
/// check_bicomplex fails.
ChainComplexZ total_complex(const DoubleComplex& dc);

/// Homology of the row (A_{*,q}, d') as a chain complex in degrees
/// 0..p_max.  For a cover this row is exact at p > 0 with H_0 = C_q(X).
std::vector<HomologyGroup> row_homology(const DoubleComplex& dc, int q,
                                        const CoefficientSpec& coeff);

/// The full simplex on the labels of all parts containing tau; the fiber
/// complex whose chain complex is the tau-column of the row decomposition.
/// Throws std::invalid_argument when tau is not a simplex of the base.
SimplicialComplex nf_complex(const Cover& cover, const Simplex& tau);

/// Bottom row of the first page: E^1_{m,0} is free on pairs (sigma, c) with
/// c a path component of U_sigma (represented by its least vertex), and the
/// differential sends (sigma, c) to the alternating sum of (face of sigma,
/// component containing c).  Degrees run 0..dc.p_max.
ChainComplexZ e1_bottom_row(const DoubleComplex& dc, const Cover& cover);

namespace detail {

/// Basis of the E^1 bottom row in degrees 0..p_max: per degree, the pairs
/// (sigma, least vertex of a component of U_sigma) in lexicographic order.
struct E1Row {
    std::vector<std::vector<std::pair<Simplex, VertexId>>> basis;
    ChainComplexZ cc;
};

E1Row build_e1_row(const Cover& cover, int p_max);

}  // namespace detail

}  // namespace nervecheck
