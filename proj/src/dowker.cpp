#include "nervecheck/dowker.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nervecheck {

namespace {

void check_distinct(const std::vector<std::string>& labels, const char* side)
{
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty())
            throw std::invalid_argument(std::string("DowkerRelation: empty ") + side +
                                        " label");
        if (!seen.insert(l).second)
            throw std::invalid_argument(std::string("DowkerRelation: duplicate ") + side +
                                        " label '" + l + "'");
    }
}

/// Complex whose simplices are the nonempty subsets of the given vertex
/// sets, optionally only up to dimension max_dim.  The result is closed
/// under faces because all subset sizes are enumerated.
SimplicialComplex complex_from_fibers(const std::vector<std::vector<std::string>>& fibers,
                                      std::optional<int> max_dim)
{
    if (!max_dim) {
        std::vector<std::vector<std::string>> nonempty;
        for (const auto& f : fibers)
            if (!f.empty())
                nonempty.push_back(f);
        return SimplicialComplex::closure(nonempty);
    }
    std::set<Simplex> acc;
    const int cap = *max_dim;
    if (cap < 0)
        return SimplicialComplex();
    for (const auto& f : fibers) {
        const int n = static_cast<int>(f.size());
        const int max_size = std::min(n, cap + 1);
        for (int k = 1; k <= max_size; ++k) {
            std::vector<int> idx(k);
            for (int i = 0; i < k; ++i)
                idx[i] = i;
            while (true) {
                std::vector<std::string> subset;
                subset.reserve(k);
                for (int i : idx)
                    subset.push_back(f[i]);
                acc.insert(Simplex::of_labels(subset));
                int i = k - 1;
                while (i >= 0 && idx[i] == n - k + i)
                    --i;
                if (i < 0)
                    break;
                ++idx[i];
                for (int j = i + 1; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return SimplicialComplex::from_closed_set(std::move(acc));
}

}  // namespace

void DowkerRelation::validate() const
{
    check_distinct(row_labels, "row");
    check_distinct(col_labels, "column");
    const std::set<std::string> rows(row_labels.begin(), row_labels.end());
    const std::set<std::string> cols(col_labels.begin(), col_labels.end());
    for (const auto& [r, c] : pairs) {
        if (!rows.count(r))
            throw std::invalid_argument("DowkerRelation: pair references unknown row '" + r +
                                        "'");
        if (!cols.count(c))
            throw std::invalid_argument("DowkerRelation: pair references unknown column '" +
                                        c + "'");
    }
}

std::pair<SimplicialComplex, SimplicialComplex> dowker_pair(const DowkerRelation& relation,
                                                            std::optional<int> max_dim)
{
    relation.validate();

    std::map<std::string, std::vector<std::string>> col_fiber;  // column -> related rows
    std::map<std::string, std::vector<std::string>> row_fiber;  // row -> related columns
    for (const auto& [r, c] : relation.pairs) {
        col_fiber[c].push_back(r);
        row_fiber[r].push_back(c);
    }

    std::vector<std::vector<std::string>> row_sets, col_sets;
    for (auto& [c, rows] : col_fiber)
        row_sets.push_back(std::move(rows));
    for (auto& [r, cols] : row_fiber)
        col_sets.push_back(std::move(cols));

    return {complex_from_fibers(row_sets, max_dim), complex_from_fibers(col_sets, max_dim)};
}

}  // namespace nervecheck
