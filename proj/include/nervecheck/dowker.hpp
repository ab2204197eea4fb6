#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nervecheck/simplicial_complex.hpp"

namespace nervecheck {

/// Finite binary relation between labeled row and column sets.  Pairs must
/// reference declared labels; both label lists must be duplicate-free.
struct DowkerRelation {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::set<std::pair<std::string, std::string>> pairs;

    /// Throws std::invalid_argument on undeclared labels or duplicates.
    void validate() const;
};

/// The two Dowker complexes of a relation.  The row complex has a simplex
/// per finite set of rows sharing a common related column; the column
/// complex is defined symmetrically.  Rows (columns) related to nothing
/// span no simplex.  With max_dim set, both complexes are truncated to that
/// dimension.  Dowker duality asserts the two have the same homology.
std::pair<SimplicialComplex, SimplicialComplex> dowker_pair(
    const DowkerRelation& relation, std::optional<int> max_dim = std::nullopt);

}  // namespace nervecheck
