#pragma once

// Shared fixture complexes and covers with hand-checkable homology.

#include <map>
#include <string>
#include <vector>

#include "nervecheck/cover.hpp"
#include "nervecheck/simplicial_complex.hpp"

namespace fixtures {

using nervecheck::Cover;
using nervecheck::LabelLess;
using nervecheck::SimplicialComplex;

using PartMap = std::map<std::string, SimplicialComplex, LabelLess>;

/// Full simplex on vertices "0".."n".
inline SimplicialComplex full_simplex(int n)
{
    std::vector<std::string> top;
    for (int i = 0; i <= n; ++i)
        top.push_back(std::to_string(i));
    return SimplicialComplex::closure({top});
}

/// Boundary of the n-simplex: all proper faces; a combinatorial (n-1)-sphere.
inline SimplicialComplex boundary_delta(int n)
{
    std::vector<std::vector<std::string>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<std::string> facet;
        for (int i = 0; i <= n; ++i)
            if (i != skip)
                facet.push_back(std::to_string(i));
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::closure(facets);
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2()
{
    return SimplicialComplex::closure({{"1", "2", "5"},
                                       {"1", "2", "6"},
                                       {"1", "3", "4"},
                                       {"1", "3", "6"},
                                       {"1", "4", "5"},
                                       {"2", "3", "4"},
                                       {"2", "3", "5"},
                                       {"2", "4", "6"},
                                       {"3", "5", "6"},
                                       {"4", "5", "6"}});
}

/// 7-vertex triangulation of the torus (Csaszar): triangles {i, i+1, i+3}
/// and {i, i+2, i+3} modulo 7.
inline SimplicialComplex torus7()
{
    std::vector<std::vector<std::string>> faces;
    for (int i = 0; i < 7; ++i) {
        auto v = [i](int k) { return std::to_string((i + k) % 7); };
        faces.push_back({v(0), v(1), v(3)});
        faces.push_back({v(0), v(2), v(3)});
    }
    return SimplicialComplex::closure(faces);
}

/// Hexagon graph: a 6-cycle with vertices "1".."6".
inline SimplicialComplex hexagon()
{
    return SimplicialComplex::closure(
        {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"1", "6"}});
}

inline SimplicialComplex two_points()
{
    return SimplicialComplex::closure({{"a"}, {"b"}});
}

/// Triangle boundary covered by its three closed edges.
inline Cover triangle_cover()
{
    PartMap parts;
    parts.emplace("a", SimplicialComplex::closure({{"a", "b"}}));
    parts.emplace("b", SimplicialComplex::closure({{"b", "c"}}));
    parts.emplace("c", SimplicialComplex::closure({{"a", "c"}}));
    return Cover(SimplicialComplex::closure({{"a", "b"}, {"b", "c"}, {"a", "c"}}),
                 std::move(parts));
}

/// Hexagon covered by two closed arcs meeting in the two antipodal vertex
/// pairs {1} and {4}; the intersection is disconnected, so the cover fails
/// goodness in degree 0 at the edge {U1, U2}.
inline Cover hexagon_two_arc_cover()
{
    PartMap parts;
    parts.emplace("U1", SimplicialComplex::closure({{"1", "2"}, {"2", "3"}, {"3", "4"}}));
    parts.emplace("U2", SimplicialComplex::closure({{"4", "5"}, {"5", "6"}, {"1", "6"}}));
    return Cover(hexagon(), std::move(parts));
}

/// Hexagon covered by three closed arcs with contractible pairwise
/// intersections and empty triple intersection; the nerve is again a circle.
inline Cover hexagon_three_arc_cover()
{
    PartMap parts;
    parts.emplace("U1", SimplicialComplex::closure({{"1", "2"}, {"2", "3"}}));
    parts.emplace("U2", SimplicialComplex::closure({{"3", "4"}, {"4", "5"}}));
    parts.emplace("U3", SimplicialComplex::closure({{"5", "6"}, {"1", "6"}}));
    return Cover(hexagon(), std::move(parts));
}

/// Cover of a complex by the closures of its maximal simplices.  Closed
/// simplices intersect in a closed common face (or nothing), so every
/// nonempty intersection is a cone; such covers satisfy the goodness
/// hypothesis at every level.
inline Cover facet_cover(const SimplicialComplex& k)
{
    PartMap parts;
    int i = 0;
    for (const auto& s : k.maximal_simplices())
        parts.emplace("F" + std::to_string(i++),
                      SimplicialComplex::closure({s.labels()}));
    return Cover(k, std::move(parts));
}

}  // namespace fixtures
