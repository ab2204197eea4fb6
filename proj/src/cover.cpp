#include "nervecheck/cover.hpp"

#include <algorithm>

namespace nervecheck {

Cover::Cover(SimplicialComplex base, std::map<std::string, SimplicialComplex, LabelLess> parts)
    : base_(std::move(base)), parts_(std::move(parts))
{
    for (const auto& [label, k] : parts_) {
        if (label.empty())
            throw std::invalid_argument("Cover: empty part label");
        if (!k.subcomplex_of(base_)) {
            std::vector<Simplex> stray;
            for (const auto& s : k.simplices())
                if (!base_.contains(s))
                    stray.push_back(s);
            throw CoverError("Cover: part '" + label + "' is not a subcomplex of the base",
                             std::move(stray));
        }
    }
    std::vector<Simplex> uncovered;
    for (const auto& s : base_.simplices()) {
        bool hit = false;
        for (const auto& [label, k] : parts_)
            if (k.contains(s)) {
                hit = true;
                break;
            }
        if (!hit)
            uncovered.push_back(s);
    }
    if (!uncovered.empty())
        throw CoverError("Cover: " + std::to_string(uncovered.size()) +
                             " base simplices lie in no part",
                         std::move(uncovered));
}

std::vector<std::string> Cover::labels() const
{
    std::vector<std::string> out;
    out.reserve(parts_.size());
    for (const auto& [label, k] : parts_)
        out.push_back(label);
    return out;
}

const SimplicialComplex& Cover::part(const std::string& label) const
{
    auto it = parts_.find(label);
    if (it == parts_.end())
        throw std::out_of_range("Cover: unknown part '" + label + "'");
    return it->second;
}

SimplicialComplex intersection(const Cover& cover, const std::vector<std::string>& sigma)
{
    if (sigma.empty())
        throw std::invalid_argument("intersection: empty label selection");
    SimplicialComplex result = cover.part(sigma.front());
    for (std::size_t i = 1; i < sigma.size(); ++i)
        result = result.intersect(cover.part(sigma[i]));
    return result;
}

SimplicialComplex nerve(const Cover& cover, std::optional<int> max_dim)
{
    const int cap = max_dim.value_or(static_cast<int>(cover.size()) - 1);
    std::set<Simplex> simplices;
    if (cap < 0)
        return SimplicialComplex();

    // Level-wise clique growth: extend each sigma only by strictly larger
    // labels, carrying U_sigma so every intersection is computed once.
    std::vector<std::pair<Simplex, SimplicialComplex>> level;
    for (const auto& label : cover.labels()) {
        if (cover.part(label).empty())
            continue;
        Simplex v = Simplex::of_labels({label});
        simplices.insert(v);
        level.emplace_back(std::move(v), cover.part(label));
    }
    for (int d = 1; d <= cap && !level.empty(); ++d) {
        std::vector<std::pair<Simplex, SimplicialComplex>> next;
        for (const auto& [sigma, u_sigma] : level) {
            for (const auto& label : cover.labels()) {
                VertexId v{label};
                if (!(sigma.vertices.back() < v))
                    continue;
                SimplicialComplex u = u_sigma.intersect(cover.part(label));
                if (u.empty())
                    continue;
                Simplex extended = sigma;
                extended.vertices.push_back(v);
                simplices.insert(extended);
                next.emplace_back(std::move(extended), std::move(u));
            }
        }
        level = std::move(next);
    }
    return SimplicialComplex::from_closed_set(std::move(simplices));
}

std::vector<GoodCoverViolation> good_up_to_level(const Cover& cover, int n, int up_to)
{
    if (n < 1)
        throw std::invalid_argument("good_up_to_level: need n >= 1");
    if (up_to < 0)
        throw std::invalid_argument("good_up_to_level: negative degree bound");

    std::vector<GoodCoverViolation> violations;
    // Simplices of the nerve up to dimension n-1 enumerate exactly the
    // nonempty intersections of at most n parts.
    const SimplicialComplex nv = nerve(cover, n - 1);
    for (const auto& sigma : nv.simplices()) {
        const SimplicialComplex u = intersection(cover, sigma.labels());
        const auto reduced = homology(u, CoefficientSpec::integers(), /*reduced=*/true);
        for (int j = 0; j <= up_to; ++j) {
            const HomologyGroup g = group_at(reduced, j);
            if (!g.is_zero())
                violations.push_back({sigma.labels(), j, g});
        }
    }
    return violations;
}

}  // namespace nervecheck
