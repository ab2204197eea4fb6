#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nervecheck/homology.hpp"
#include "nervecheck/simplicial_complex.hpp"

namespace nervecheck {

/// Raised when a claimed cover is not one: some part is not a subcomplex of
/// the base, or the parts fail to exhaust it.  The offending simplices are
/// carried for diagnostics.
class CoverError : public std::runtime_error {
public:
    CoverError(const std::string& message, std::vector<Simplex> offending)
        : std::runtime_error(message), offending_simplices(std::move(offending))
    {
    }

    std::vector<Simplex> offending_simplices;
};

/// Comparator giving part labels the same numeric-aware order as vertices.
struct LabelLess {
    bool operator()(const std::string& a, const std::string& b) const
    {
        return VertexId{a} < VertexId{b};
    }
};

/// Cover of a simplicial complex by labeled subcomplexes whose union is the
/// whole complex.  Both conditions are checked at construction; parts may be
/// empty complexes (they simply never appear in the nerve).
class Cover {
public:
    Cover(SimplicialComplex base, std::map<std::string, SimplicialComplex, LabelLess> parts);

    const SimplicialComplex& base() const { return base_; }
    std::size_t size() const { return parts_.size(); }
    std::vector<std::string> labels() const;
    bool has_part(const std::string& label) const { return parts_.count(label) > 0; }

    /// Throws std::out_of_range for an unknown label.
    const SimplicialComplex& part(const std::string& label) const;

private:
    SimplicialComplex base_;
    std::map<std::string, SimplicialComplex, LabelLess> parts_;
};

/// Intersection of the parts selected by sigma (a nonempty set of labels).
/// Throws std::invalid_argument on an empty selection or unknown labels.
SimplicialComplex intersection(const Cover& cover, const std::vector<std::string>& sigma);

/// Nerve of the cover: vertices are labels of nonempty parts, and a set of
/// labels spans a simplex when the corresponding parts have a nonempty
/// common intersection.  With max_dim set, only simplices of dimension
/// <= max_dim are produced (the result is the truncated skeleton).
SimplicialComplex nerve(const Cover& cover, std::optional<int> max_dim = std::nullopt);

/// One reduced-homology obstruction: H~_degree(U_sigma) = group != 0.
struct GoodCoverViolation {
    std::vector<std::string> sigma;
    int degree = 0;
    HomologyGroup group;
};

/// All violations of "good up to level": every nonempty intersection of at
/// most n parts must have trivial reduced homology in degrees 0..up_to.
/// The empty list means the cover is good in that range.  Requires n >= 1.
std::vector<GoodCoverViolation> good_up_to_level(const Cover& cover, int n, int up_to);

}  // namespace nervecheck
