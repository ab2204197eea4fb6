#include "nervecheck/subspace.hpp"

#include <stdexcept>

namespace nervecheck {

namespace {

DenseInt multiply_rows(const DenseInt& k, const IntMatrix& m)
{
    // k has rows of length m.rows(); result rows have length m.cols().
    DenseInt out(k.size(), std::vector<Int>(m.cols(), Int(0)));
    for (const auto& [rc, v] : m.entries())
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i][rc.first] != 0)
                out[i][rc.second] += k[i][rc.first] * v;
    return out;
}

}  // namespace

Subspace::Subspace(CoefficientSpec field, int ambient, DenseInt basis)
    : field_(field), ambient_(ambient), basis_(std::move(basis))
{
}

Subspace Subspace::zero(const CoefficientSpec& field, int ambient)
{
    if (!field.is_field())
        throw std::invalid_argument("Subspace: coefficients must form a field");
    if (ambient < 0)
        throw std::invalid_argument("Subspace: negative ambient dimension");
    return Subspace(field, ambient, {});
}

Subspace Subspace::full(const CoefficientSpec& field, int ambient)
{
    std::vector<int> all(ambient);
    for (int i = 0; i < ambient; ++i)
        all[i] = i;
    return coordinate(field, ambient, all);
}

Subspace Subspace::span(const CoefficientSpec& field, int ambient, const DenseInt& vectors)
{
    Subspace s = zero(field, ambient);
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambient)
            throw std::invalid_argument("Subspace: vector length does not match ambient");
    s.basis_ = detail::rref_over(vectors, field);
    return s;
}

Subspace Subspace::coordinate(const CoefficientSpec& field, int ambient,
                              const std::vector<int>& indices)
{
    DenseInt rows;
    rows.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= ambient)
            throw std::out_of_range("Subspace: coordinate index outside ambient");
        std::vector<Int> e(ambient, Int(0));
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return span(field, ambient, rows);
}

void Subspace::require_compatible(const Subspace& other) const
{
    if (!(field_ == other.field_) || ambient_ != other.ambient_)
        throw std::invalid_argument("Subspace: ambient space or field mismatch");
}

DenseInt Subspace::check_rows() const
{
    return detail::kernel_over(basis_, ambient_, field_);
}

Subspace Subspace::sum(const Subspace& other) const
{
    require_compatible(other);
    DenseInt stacked = basis_;
    stacked.insert(stacked.end(), other.basis_.begin(), other.basis_.end());
    return span(field_, ambient_, stacked);
}

Subspace Subspace::intersect(const Subspace& other) const
{
    require_compatible(other);
    DenseInt stacked = check_rows();
    DenseInt k2 = other.check_rows();
    stacked.insert(stacked.end(), k2.begin(), k2.end());
    return span(field_, ambient_, detail::kernel_over(stacked, ambient_, field_));
}

bool Subspace::contains(const std::vector<Int>& v) const
{
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("Subspace: vector length does not match ambient");
    DenseInt stacked = basis_;
    stacked.push_back(v);
    return detail::rank_over(stacked, field_) == dim();
}

bool Subspace::operator==(const Subspace& other) const
{
    return field_ == other.field_ && ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace Subspace::image_under(const IntMatrix& m) const
{
    if (m.cols() != ambient_)
        throw std::invalid_argument("Subspace: image ambient mismatch");
    DenseInt vectors;
    vectors.reserve(basis_.size());
    for (const auto& b : basis_)
        vectors.push_back(m.apply(b));
    return span(field_, m.rows(), vectors);
}

Subspace Subspace::preimage_under(const IntMatrix& m) const
{
    if (m.rows() != ambient_)
        throw std::invalid_argument("Subspace: preimage ambient mismatch");
    if (dim() == ambient_)  // preimage of everything is everything
        return full(field_, m.cols());
    DenseInt composed = multiply_rows(check_rows(), m);
    return span(field_, m.cols(), detail::kernel_over(composed, m.cols(), field_));
}

}  // namespace nervecheck
