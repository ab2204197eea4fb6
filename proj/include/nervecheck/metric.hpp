#pragma once

#include <string>
#include <vector>

#include "nervecheck/integers.hpp"
#include "nervecheck/simplicial_complex.hpp"

namespace nervecheck {

/// Finite labeled point set with exact rational pairwise distances.  Only
/// symmetry, zero diagonal, and nonnegativity are required; the triangle
/// inequality is not (Vietoris-Rips complexes make sense without it).
///
/// Squared distances are stored so that points given by coordinates never
/// need square roots: d(x,y) < r is decided as d(x,y)^2 < r^2, exactly.
class FiniteMetricSpace {
public:
    /// Points with rational coordinates; distances are Euclidean.  Labels
    /// default to "0", "1", ... in input order.
    static FiniteMetricSpace from_coordinates(const std::vector<std::vector<Rat>>& points,
                                              std::vector<std::string> labels = {});

    /// Explicit distance matrix (entries are distances, not squares).
    static FiniteMetricSpace from_distances(const std::vector<std::vector<Rat>>& dist,
                                            std::vector<std::string> labels = {});

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Rat& squared_distance(std::size_t i, std::size_t j) const
    {
        return sq_dist_[i][j];
    }

private:
    FiniteMetricSpace() = default;

    std::vector<std::string> labels_;
    std::vector<std::vector<Rat>> sq_dist_;
};

/// Vietoris-Rips complex at scale r > 0: simplices are the point sets of
/// diameter strictly less than r, up to dimension max_dim.  Comparisons are
/// exact (squared distances against r^2).  Throws std::invalid_argument for
/// r <= 0 or max_dim < 0.
SimplicialComplex vietoris_rips(const FiniteMetricSpace& space, const Rat& r, int max_dim);

}  // namespace nervecheck
