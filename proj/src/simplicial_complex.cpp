#include "nervecheck/simplicial_complex.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nervecheck {

namespace {

bool all_digits(const std::string& s)
{
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

bool VertexId::operator<(const VertexId& other) const
{
    if (all_digits(label) && all_digits(other.label)) {
        // Compare by numeric value without parsing: strip leading zeros,
        // then shorter means smaller, then digit order decides.
        auto stripped = [](const std::string& s) {
            std::size_t i = s.find_first_not_of('0');
            return i == std::string::npos ? std::string("0") : s.substr(i);
        };
        const std::string a = stripped(label), b = stripped(other.label);
        if (a.size() != b.size())
            return a.size() < b.size();
        if (a != b)
            return a < b;
        return label < other.label;  // numeric tie such as "02" vs "2"
    }
    return label < other.label;
}

Simplex Simplex::of(std::vector<VertexId> vs)
{
    if (vs.empty())
        throw std::invalid_argument("Simplex: vertex set must be nonempty");
    for (const auto& v : vs)
        if (v.label.empty())
            throw std::invalid_argument("Simplex: empty vertex label");
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (vs[i] == vs[i - 1])
            throw std::invalid_argument("Simplex: duplicate vertex '" + vs[i].label + "'");
    Simplex s;
    s.vertices = std::move(vs);
    return s;
}

Simplex Simplex::of_labels(const std::vector<std::string>& labels)
{
    std::vector<VertexId> vs;
    vs.reserve(labels.size());
    for (const auto& l : labels)
        vs.push_back(VertexId{l});
    return of(std::move(vs));
}

Simplex Simplex::face_without(int j) const
{
    if (dim() < 1)
        throw std::invalid_argument("Simplex: vertices have no faces");
    if (j < 0 || j > dim())
        throw std::out_of_range("Simplex: face index out of range");
    Simplex s;
    s.vertices = vertices;
    s.vertices.erase(s.vertices.begin() + j);
    return s;
}

bool Simplex::operator<(const Simplex& other) const
{
    return std::lexicographical_compare(vertices.begin(), vertices.end(),
                                        other.vertices.begin(), other.vertices.end());
}

std::vector<std::string> Simplex::labels() const
{
    std::vector<std::string> out;
    out.reserve(vertices.size());
    for (const auto& v : vertices)
        out.push_back(v.label);
    return out;
}

SimplicialComplex SimplicialComplex::closure(
    const std::vector<std::vector<std::string>>& simplices)
{
    std::vector<Simplex> parsed;
    parsed.reserve(simplices.size());
    for (const auto& labels : simplices)
        parsed.push_back(Simplex::of_labels(labels));
    return closure_of(parsed);
}

SimplicialComplex SimplicialComplex::closure_of(const std::vector<Simplex>& simplices)
{
    SimplicialComplex k;
    for (const auto& s : simplices) {
        // Every nonempty subset of the vertex set, via bitmask enumeration.
        const auto& vs = s.vertices;
        const std::size_t n = vs.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i))
                    face.vertices.push_back(vs[i]);
            k.simplices_.insert(std::move(face));
        }
    }
    return k;
}

SimplicialComplex SimplicialComplex::from_closed_set(std::set<Simplex> simplices)
{
    SimplicialComplex k;
    k.simplices_ = std::move(simplices);
    return k;
}

int SimplicialComplex::dim() const
{
    int d = -1;
    for (const auto& s : simplices_)
        d = std::max(d, s.dim());
    return d;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int q) const
{
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (s.dim() == q)
            out.push_back(s);
    return out;  // set order restricted to one dimension is lexicographic
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const
{
    std::vector<Simplex> out;
    for (const auto& s : simplices_) {
        bool maximal = true;
        for (const auto& t : simplices_) {
            if (t.dim() <= s.dim() || t == s)
                continue;
            if (std::includes(t.vertices.begin(), t.vertices.end(),
                              s.vertices.begin(), s.vertices.end()))
                maximal = false;
            if (!maximal)
                break;
        }
        if (maximal)
            out.push_back(s);
    }
    return out;
}

std::vector<VertexId> SimplicialComplex::vertices() const
{
    std::vector<VertexId> out;
    for (const auto& s : simplices_)
        if (s.dim() == 0)
            out.push_back(s.vertices[0]);
    return out;
}

SimplicialComplex SimplicialComplex::skeleton(int n) const
{
    std::set<Simplex> kept;
    for (const auto& s : simplices_)
        if (s.dim() <= n)
            kept.insert(s);
    return from_closed_set(std::move(kept));
}

SimplicialComplex SimplicialComplex::intersect(const SimplicialComplex& other) const
{
    std::set<Simplex> kept;
    for (const auto& s : simplices_)
        if (other.contains(s))
            kept.insert(s);
    return from_closed_set(std::move(kept));
}

bool SimplicialComplex::subcomplex_of(const SimplicialComplex& other) const
{
    return std::includes(other.simplices_.begin(), other.simplices_.end(),
                         simplices_.begin(), simplices_.end());
}

}  // namespace nervecheck
