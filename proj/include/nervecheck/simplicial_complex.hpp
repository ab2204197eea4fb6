#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace nervecheck {

/// Vertex identifier.  Ordering is numeric-aware: two labels consisting
/// entirely of digits compare by value (ties, e.g. "02" vs "2", fall back to
/// the raw string); any other pair compares lexicographically.  This keeps
/// vertex orderings, and hence boundary matrix signs, stable across runs.
struct VertexId {
    std::string label;

    bool operator==(const VertexId& other) const { return label == other.label; }
    bool operator!=(const VertexId& other) const { return label != other.label; }
    bool operator<(const VertexId& other) const;
    bool operator>(const VertexId& other) const { return other < *this; }
};

/// Nonempty finite vertex set, stored strictly increasing.
struct Simplex {
    std::vector<VertexId> vertices;

    /// Sorts and validates; throws std::invalid_argument on duplicates or
    /// empty labels.
    static Simplex of(std::vector<VertexId> vs);
    static Simplex of_labels(const std::vector<std::string>& labels);

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    /// j-th face: the simplex with vertex j deleted.  Requires dim() >= 1.
    Simplex face_without(int j) const;

    bool operator==(const Simplex& other) const { return vertices == other.vertices; }
    bool operator!=(const Simplex& other) const { return vertices != other.vertices; }
    bool operator<(const Simplex& other) const;

    std::vector<std::string> labels() const;
};

/// Finite abstract simplicial complex: a set of simplices closed under
/// taking faces.  The empty complex is allowed and has dimension -1.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of a list of simplices given by vertex labels.
    static SimplicialComplex closure(const std::vector<std::vector<std::string>>& simplices);
    static SimplicialComplex closure_of(const std::vector<Simplex>& simplices);

    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }
    int dim() const;

    /// q-simplices in lexicographic vertex order; the canonical basis of C_q.
    std::vector<Simplex> simplices_of_dim(int q) const;

    /// Simplices that are not a proper face of any other simplex.
    std::vector<Simplex> maximal_simplices() const;

    const std::set<Simplex>& simplices() const { return simplices_; }
    std::vector<VertexId> vertices() const;

    /// Subcomplex of simplices of dimension <= n.
    SimplicialComplex skeleton(int n) const;

    SimplicialComplex intersect(const SimplicialComplex& other) const;
    bool subcomplex_of(const SimplicialComplex& other) const;
    bool operator==(const SimplicialComplex& other) const
    {
        return simplices_ == other.simplices_;
    }

    /// Trusted constructor: the caller guarantees face closure.
    static SimplicialComplex from_closed_set(std::set<Simplex> simplices);

private:
    std::set<Simplex> simplices_;
};

}  // namespace nervecheck
