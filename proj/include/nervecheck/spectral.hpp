#pragma once

#include <map>
#include <vector>

#include "nervecheck/double_complex.hpp"
#include "nervecheck/subspace.hpp"

namespace nervecheck {

/// Which filtration of the total complex to run:
///   first  - by nerve degree p (columns); E^1 collapses rows
///   second - by coefficient degree q (rows); E^1 collapses columns
enum class FiltrationSide { first, second };

/// Dimensions of one spectral sequence page over a field, indexed by the
/// display coordinates (p, q) of the double complex.  Zero cells are not
/// stored.
struct PageTable {
    int r = 1;
    std::map<std::pair<int, int>, int> dims;

    int dim(int p, int q) const
    {
        auto it = dims.find({p, q});
        return it == dims.end() ? 0 : it->second;
    }
    int total(int n) const
    {
        int acc = 0;
        for (const auto& [pq, d] : dims)
            if (pq.first + pq.second == n)
                acc += d;
        return acc;
    }
    bool operator==(const PageTable& other) const
    {
        return r == other.r && dims == other.dims;
    }
};

struct SpectralSequence {
    std::vector<PageTable> pages;  // pages[r-1] holds page r, r = 1..r_max
    /// True when page r_max+1 equals page r_max pointwise, i.e. every
    /// differential in the computed range has become zero.
    bool stabilized = false;
};

/// Pages of the filtration spectral sequence over a field, computed from
/// exact subspace arithmetic on the total complex:
///
///   Z^r(s, n)    = F_s T_n  intersect  d^{-1}(F_{s-r} T_{n-1})
///   dim E^r(s,t) = dim Z^r(s, n) - dim( Z^{r-1}(s-1, n) + d Z^{r-1}(s+r-1, n+1) )
///
/// with n = s + t and F the chosen filtration (a prefix of the block order
/// for `first`, a suffix for `second`).  Both denominators are subspaces of
/// Z^r(s, n), so the difference is the page dimension.  Throws
/// std::invalid_argument for non-field coefficients or r_max < 1.
SpectralSequence ss_pages(const DoubleComplex& dc, FiltrationSide side,
                          const CoefficientSpec& field, int r_max);

}  // namespace nervecheck
