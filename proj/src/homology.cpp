#include "nervecheck/homology.hpp"

#include <map>
#include <stdexcept>

namespace nervecheck {

bool ChainComplexZ::composites_zero() const
{
    for (int n = 1; n + 1 <= top_degree(); ++n)
        if (!(d[n] * d[n + 1]).is_zero())
            return false;
    return true;
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int q, bool augmented)
{
    if (q < 0)
        throw std::invalid_argument("boundary_matrix: negative degree");
    const auto cols = k.simplices_of_dim(q);
    if (q == 0) {
        const int n0 = static_cast<int>(cols.size());
        IntMatrix m(augmented ? 1 : 0, n0);
        if (augmented)
            for (int j = 0; j < n0; ++j)
                m.set(0, j, 1);
        return m;
    }
    const auto rows = k.simplices_of_dim(q - 1);
    std::map<Simplex, int> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_index.emplace(rows[i], static_cast<int>(i));

    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Int sign = 1;
        for (int f = 0; f <= q; ++f) {
            m.set(row_index.at(cols[j].face_without(f)), static_cast<int>(j), sign);
            sign = -sign;
        }
    }
    return m;
}

ChainComplexZ chain_complex(const SimplicialComplex& k)
{
    ChainComplexZ cc;
    const int top = std::max(k.dim(), 0);
    cc.dims.resize(top + 1);
    cc.d.reserve(top + 1);
    for (int n = 0; n <= top; ++n) {
        cc.dims[n] = static_cast<int>(k.simplices_of_dim(n).size());
        cc.d.push_back(boundary_matrix(k, n));
    }
    return cc;
}

namespace {

int boundary_rank(const IntMatrix& m, const CoefficientSpec& coeff)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    const CoefficientSpec field =
        coeff.is_field() ? coeff : CoefficientSpec::rationals();
    return rank(m, field);
}

std::vector<Int> torsion_of(const IntMatrix& next_boundary)
{
    std::vector<Int> out;
    for (const Int& f : snf(next_boundary).factors)
        if (f > 1)
            out.push_back(f);
    return out;
}

}  // namespace

std::vector<HomologyGroup> homology(const ChainComplexZ& cc, const CoefficientSpec& coeff)
{
    const int top = cc.top_degree();
    std::vector<HomologyGroup> out(top < 0 ? 0 : top + 1);
    std::vector<int> r(top + 2, 0);  // r[n] = rank of d_n over the field
    for (int n = 1; n <= top; ++n)
        r[n] = boundary_rank(cc.d[n], coeff);
    for (int n = 0; n <= top; ++n) {
        out[n].free_rank = cc.dims[n] - r[n] - r[n + 1];
        if (!coeff.is_field() && n + 1 <= top)
            out[n].torsion = torsion_of(cc.d[n + 1]);
    }
    return out;
}

std::vector<HomologyGroup> homology(const SimplicialComplex& k, const CoefficientSpec& coeff,
                                    bool reduced)
{
    if (k.empty())
        return {};
    ChainComplexZ cc = chain_complex(k);
    std::vector<HomologyGroup> out = homology(cc, coeff);
    if (reduced && !out.empty()) {
        // The augmentation has rank 1 on a nonempty complex, whatever the
        // coefficients; it removes one free generator in degree 0.
        out[0].free_rank -= 1;
    }
    return out;
}

bool is_homologically_trivial(const SimplicialComplex& k, int up_to)
{
    if (k.empty())
        throw std::invalid_argument("is_homologically_trivial: empty complex");
    if (up_to < 0)
        throw std::invalid_argument("is_homologically_trivial: negative degree bound");
    const auto groups = homology(k, CoefficientSpec::integers(), /*reduced=*/true);
    for (int j = 0; j <= up_to; ++j)
        if (!group_at(groups, j).is_zero())
            return false;
    return true;
}

HomologyGroup group_at(const std::vector<HomologyGroup>& groups, int degree)
{
    if (degree < 0 || degree >= static_cast<int>(groups.size()))
        return {};
    return groups[degree];
}

bool homology_equal(const std::vector<HomologyGroup>& a, const std::vector<HomologyGroup>& b)
{
    const int top = static_cast<int>(std::max(a.size(), b.size()));
    for (int q = 0; q < top; ++q)
        if (group_at(a, q) != group_at(b, q))
            return false;
    return true;
}

}  // namespace nervecheck
