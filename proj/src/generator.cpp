#include "nervecheck/generator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nervecheck {

int InstanceRng::below(int n)
{
    if (n < 1)
        throw std::invalid_argument("InstanceRng::below: n must be >= 1");
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
}

int InstanceRng::in(int lo, int hi)
{
    if (lo > hi)
        throw std::invalid_argument("InstanceRng::in: empty range");
    return lo + below(hi - lo + 1);
}

SimplicialComplex random_complex(InstanceRng& rng, int n_vertices, int n_facets,
                                 int max_facet_dim)
{
    if (n_vertices < 1 || n_facets < 1 || max_facet_dim < 0)
        throw std::invalid_argument("random_complex: need vertices, facets and dim >= 0");

    std::vector<std::string> pool;
    pool.reserve(n_vertices);
    for (int v = 0; v < n_vertices; ++v)
        pool.push_back(std::to_string(v));

    std::vector<std::vector<std::string>> facets;
    for (int f = 0; f < n_facets; ++f) {
        const int size = rng.in(1, std::min(max_facet_dim + 1, n_vertices));
        // Partial Fisher-Yates: the first `size` slots become the facet.
        std::vector<std::string> deck = pool;
        for (int i = 0; i < size; ++i)
            std::swap(deck[i], deck[i + rng.below(static_cast<int>(deck.size()) - i)]);
        facets.emplace_back(deck.begin(), deck.begin() + size);
    }
    return SimplicialComplex::closure(facets);
}

Cover facet_cover(const SimplicialComplex& base)
{
    std::map<std::string, SimplicialComplex, LabelLess> parts;
    int i = 0;
    for (const Simplex& m : base.maximal_simplices())
        parts.emplace("F" + std::to_string(i++), SimplicialComplex::closure_of({m}));
    return Cover(base, std::move(parts));
}

Cover star_cover(const SimplicialComplex& base)
{
    const std::vector<Simplex> maximal = base.maximal_simplices();
    std::map<std::string, SimplicialComplex, LabelLess> parts;
    for (const VertexId& v : base.vertices()) {
        std::vector<Simplex> in_star;
        for (const Simplex& m : maximal)
            if (std::binary_search(m.vertices.begin(), m.vertices.end(), v))
                in_star.push_back(m);
        parts.emplace("st_" + v.label, SimplicialComplex::closure_of(in_star));
    }
    return Cover(base, std::move(parts));
}

Cover random_assignment_cover(InstanceRng& rng, const SimplicialComplex& base, int n_parts)
{
    if (n_parts < 1)
        throw std::invalid_argument("random_assignment_cover: need at least one part");

    std::vector<std::vector<Simplex>> assigned(n_parts);
    for (const Simplex& m : base.maximal_simplices()) {
        assigned[rng.below(n_parts)].push_back(m);
        if (n_parts > 1 && rng.below(3) == 0)
            assigned[rng.below(n_parts)].push_back(m);
    }

    std::map<std::string, SimplicialComplex, LabelLess> parts;
    for (int i = 0; i < n_parts; ++i)
        parts.emplace("P" + std::to_string(i), SimplicialComplex::closure_of(assigned[i]));
    return Cover(base, std::move(parts));
}

}  // namespace nervecheck
