#pragma once

#include <cstdint>
#include <random>

#include "nervecheck/cover.hpp"

namespace nervecheck {

/// Seeded source of small integers for instance generation.  Draws go
/// through the engine's raw output and a modulus rather than
/// std::uniform_int_distribution, whose sequences differ across standard
/// library implementations; this keeps generated fixtures identical
/// everywhere for a given seed.
class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-enough draw in [0, n); requires n >= 1.
    int below(int n);

    /// Draw in [lo, hi]; requires lo <= hi.
    int in(int lo, int hi);

private:
    std::mt19937_64 engine_;
};

/// Random complex on vertices "0".."n_vertices-1": the closure of n_facets
/// random simplices of dimension <= max_facet_dim each.
SimplicialComplex random_complex(InstanceRng& rng, int n_vertices, int n_facets,
                                 int max_facet_dim);

/// Cover by the closures of the maximal simplices, labeled "F0", "F1", ...
/// in the order the maximal simplices are listed.  Every part and every
/// intersection of parts is the closure of a common face, hence a cone; such
/// covers satisfy the goodness hypotheses at every level.
Cover facet_cover(const SimplicialComplex& base);

/// Cover by closed vertex stars: the part for vertex v is the closure of the
/// maximal simplices containing v, labeled "st_<v>".  Parts are cones on v,
/// but intersections of stars can carry homology.
Cover star_cover(const SimplicialComplex& base);

/// Cover with n_parts parts labeled "P0".."P<n-1>": each maximal simplex's
/// closure is added to one random part, and occasionally to a second, so the
/// union is always the whole base.  Parts left empty are legal and simply
/// absent from the nerve.
Cover random_assignment_cover(InstanceRng& rng, const SimplicialComplex& base, int n_parts);

}  // namespace nervecheck
