#include "nervecheck/metric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nervecheck {

namespace {

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels)
{
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back(std::to_string(i));
    if (labels.size() != n)
        throw std::invalid_argument("FiniteMetricSpace: label count does not match points");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty())
            throw std::invalid_argument("FiniteMetricSpace: empty point label");
        if (!seen.insert(l).second)
            throw std::invalid_argument("FiniteMetricSpace: duplicate point label '" + l +
                                        "'");
    }
    return labels;
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::from_coordinates(
    const std::vector<std::vector<Rat>>& points, std::vector<std::string> labels)
{
    const std::size_t n = points.size();
    for (const auto& p : points)
        if (p.size() != points.front().size())
            throw std::invalid_argument("FiniteMetricSpace: ragged coordinate rows");

    FiniteMetricSpace space;
    space.labels_ = default_labels(n, std::move(labels));
    space.sq_dist_.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat s = 0;
            for (std::size_t k = 0; k < points[i].size(); ++k) {
                const Rat diff = points[i][k] - points[j][k];
                s += diff * diff;
            }
            space.sq_dist_[i][j] = s;
            space.sq_dist_[j][i] = s;
        }
    return space;
}

FiniteMetricSpace FiniteMetricSpace::from_distances(const std::vector<std::vector<Rat>>& dist,
                                                    std::vector<std::string> labels)
{
    const std::size_t n = dist.size();
    for (const auto& row : dist)
        if (row.size() != n)
            throw std::invalid_argument("FiniteMetricSpace: distance matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i][i] != 0)
            throw std::invalid_argument("FiniteMetricSpace: nonzero diagonal distance");
        for (std::size_t j = 0; j < n; ++j) {
            if (dist[i][j] < 0)
                throw std::invalid_argument("FiniteMetricSpace: negative distance");
            if (dist[i][j] != dist[j][i])
                throw std::invalid_argument("FiniteMetricSpace: asymmetric distances");
        }
    }

    FiniteMetricSpace space;
    space.labels_ = default_labels(n, std::move(labels));
    space.sq_dist_.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            space.sq_dist_[i][j] = dist[i][j] * dist[i][j];
    return space;
}

SimplicialComplex vietoris_rips(const FiniteMetricSpace& space, const Rat& r, int max_dim)
{
    if (r <= 0)
        throw std::invalid_argument("vietoris_rips: scale must be positive");
    if (max_dim < 0)
        throw std::invalid_argument("vietoris_rips: negative dimension cap");
    const Rat r2 = r * r;
    const std::size_t n = space.size();

    // Point indices sorted by label so clique extension respects the vertex
    // order used everywhere else.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return VertexId{space.labels()[a]} < VertexId{space.labels()[b]};
    });
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i)
        pos[order[i]] = static_cast<int>(i);

    std::set<Simplex> acc;
    // Cliques grow one point at a time, always by label-larger points; a set
    // has diameter < r iff every pair does, so checking the new point
    // against the existing clique suffices.
    std::vector<std::vector<std::size_t>> level;
    for (std::size_t i : order) {
        acc.insert(Simplex::of_labels({space.labels()[i]}));
        level.push_back({i});
    }
    for (int d = 1; d <= max_dim && !level.empty(); ++d) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& clique : level) {
            for (std::size_t cand = 0; cand < n; ++cand) {
                if (pos[cand] <= pos[clique.back()])
                    continue;
                bool close = true;
                for (std::size_t m : clique)
                    if (!(space.squared_distance(m, cand) < r2)) {
                        close = false;
                        break;
                    }
                if (!close)
                    continue;
                std::vector<std::size_t> grown = clique;
                grown.push_back(cand);
                std::vector<std::string> labels;
                labels.reserve(grown.size());
                for (std::size_t m : grown)
                    labels.push_back(space.labels()[m]);
                acc.insert(Simplex::of_labels(labels));
                next.push_back(std::move(grown));
            }
        }
        level = std::move(next);
    }
    return SimplicialComplex::from_closed_set(std::move(acc));
}

}  // namespace nervecheck
