#include "nervecheck/double_complex.hpp"

#include <map>
#include <stdexcept>

namespace nervecheck {

namespace {

using PairBasis = std::vector<std::pair<Simplex, Simplex>>;

std::map<std::pair<Simplex, Simplex>, int> index_of(const PairBasis& basis)
{
    std::map<std::pair<Simplex, Simplex>, int> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.emplace(basis[i], static_cast<int>(i));
    return out;
}

/// Path components of the vertices of u under its edges.  Union-find where
/// the smaller root absorbs the larger, so each final root is the least
/// vertex of its component.
struct Components {
    std::vector<VertexId> vertices;  // sorted
    std::vector<int> root;           // index into vertices

    explicit Components(const SimplicialComplex& u)
    {
        for (const auto& v : u.vertices())
            vertices.push_back(v);
        root.resize(vertices.size());
        for (std::size_t i = 0; i < root.size(); ++i)
            root[i] = static_cast<int>(i);
        std::map<VertexId, int> pos;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            pos.emplace(vertices[i], static_cast<int>(i));
        for (const auto& e : u.simplices_of_dim(1)) {
            int a = find(pos.at(e.vertices[0]));
            int b = find(pos.at(e.vertices[1]));
            if (a != b)
                root[std::max(a, b)] = std::min(a, b);
        }
        for (std::size_t i = 0; i < root.size(); ++i)
            root[i] = find(static_cast<int>(i));
        index_by_vertex = std::move(pos);
    }

    int find(int i)
    {
        while (root[i] != i) {
            root[i] = root[root[i]];
            i = root[i];
        }
        return i;
    }

    /// Representative (least vertex) of the component containing v.
    VertexId rep(const VertexId& v) const
    {
        return vertices[root[index_by_vertex.at(v)]];
    }

    /// All representatives, ascending.
    std::vector<VertexId> reps() const
    {
        std::vector<VertexId> out;
        for (std::size_t i = 0; i < root.size(); ++i)
            if (root[i] == static_cast<int>(i))
                out.push_back(vertices[i]);
        return out;
    }

    std::map<VertexId, int> index_by_vertex;
};

}  // namespace

DoubleComplex build_double_complex(const Cover& cover, int p_max, int q_max)
{
    if (p_max < 0 || q_max < 0)
        throw std::invalid_argument("build_double_complex: negative grid bound");

    DoubleComplex dc;
    dc.p_max = p_max;
    dc.q_max = q_max;

    const SimplicialComplex n = nerve(cover, p_max);
    std::map<Simplex, SimplicialComplex> u_of;
    dc.nerve_simplices.resize(p_max + 1);
    for (int p = 0; p <= p_max; ++p) {
        dc.nerve_simplices[p] = n.simplices_of_dim(p);
        for (const auto& sigma : dc.nerve_simplices[p])
            u_of.emplace(sigma, intersection(cover, sigma.labels()));
    }

    dc.basis.assign(p_max + 1, {});
    for (int p = 0; p <= p_max; ++p) {
        dc.basis[p].assign(q_max + 1, {});
        for (const auto& sigma : dc.nerve_simplices[p])
            for (int q = 0; q <= q_max; ++q)
                for (const auto& tau : u_of.at(sigma).simplices_of_dim(q))
                    dc.basis[p][q].emplace_back(sigma, tau);
    }

    std::vector<std::vector<std::map<std::pair<Simplex, Simplex>, int>>> index(p_max + 1);
    for (int p = 0; p <= p_max; ++p) {
        index[p].resize(q_max + 1);
        for (int q = 0; q <= q_max; ++q)
            index[p][q] = index_of(dc.basis[p][q]);
    }

    dc.d_prime.assign(p_max + 1, {});
    dc.d_dprime.assign(p_max + 1, {});
    for (int p = 0; p <= p_max; ++p) {
        dc.d_prime[p].reserve(q_max + 1);
        dc.d_dprime[p].reserve(q_max + 1);
        for (int q = 0; q <= q_max; ++q) {
            const PairBasis& cols = dc.basis[p][q];
            IntMatrix dp(dc.dim(p - 1, q), static_cast<int>(cols.size()));
            IntMatrix ddp(dc.dim(p, q - 1), static_cast<int>(cols.size()));
            for (std::size_t j = 0; j < cols.size(); ++j) {
                const auto& [sigma, tau] = cols[j];
                if (p >= 1) {
                    Int sign = 1;
                    for (int i = 0; i <= p; ++i) {
                        // tau lies in U_sigma, hence in the larger U_face.
                        dp.add(index[p - 1][q].at({sigma.face_without(i), tau}),
                               static_cast<int>(j), sign);
                        sign = -sign;
                    }
                }
                if (q >= 1) {
                    Int sign = 1;
                    for (int i = 0; i <= q; ++i) {
                        ddp.add(index[p][q - 1].at({sigma, tau.face_without(i)}),
                                static_cast<int>(j), sign);
                        sign = -sign;
                    }
                }
            }
            dc.d_prime[p].push_back(std::move(dp));
            dc.d_dprime[p].push_back(std::move(ddp));
        }
    }
    return dc;
}

bool check_bicomplex(const DoubleComplex& dc)
{
    for (int p = 0; p <= dc.p_max; ++p)
        for (int q = 0; q <= dc.q_max; ++q) {
            if (p >= 2 && !(dc.d_prime[p - 1][q] * dc.d_prime[p][q]).is_zero())
                return false;
            if (q >= 2 && !(dc.d_dprime[p][q - 1] * dc.d_dprime[p][q]).is_zero())
                return false;
            if (p >= 1 && q >= 1 &&
                dc.d_prime[p][q - 1] * dc.d_dprime[p][q] !=
                    dc.d_dprime[p - 1][q] * dc.d_prime[p][q])
                return false;
        }
    return true;
}

ChainComplexZ total_complex(const DoubleComplex& dc)
{
    if (!check_bicomplex(dc))
        throw std::invalid_argument("total_complex: differentials do not form a bicomplex");

    const int n_max = dc.p_max + dc.q_max;
    ChainComplexZ cc;
    cc.dims.assign(n_max + 1, 0);

    // offset[n][p] = first coordinate of the A_{p,n-p} block inside T_n.
    std::vector<std::vector<int>> offset(n_max + 1, std::vector<int>(dc.p_max + 2, 0));
    for (int n = 0; n <= n_max; ++n) {
        int acc = 0;
        for (int p = 0; p <= dc.p_max; ++p) {
            offset[n][p] = acc;
            acc += dc.dim(p, n - p);
        }
        offset[n][dc.p_max + 1] = acc;
        cc.dims[n] = acc;
    }

    cc.d.push_back(IntMatrix(0, cc.dims[0]));
    for (int n = 1; n <= n_max; ++n) {
        IntMatrix d(cc.dims[n - 1], cc.dims[n]);
        for (int p = 0; p <= dc.p_max; ++p) {
            const int q = n - p;
            if (q < 0 || q > dc.q_max || dc.dim(p, q) == 0)
                continue;
            const int col0 = offset[n][p];
            if (p >= 1)
                for (const auto& [rc, v] : dc.d_prime[p][q].entries())
                    d.add(offset[n - 1][p - 1] + rc.first, col0 + rc.second, v);
            if (q >= 1) {
                const Int sign = (p % 2 == 0) ? 1 : -1;
                for (const auto& [rc, v] : dc.d_dprime[p][q].entries())
                    d.add(offset[n - 1][p] + rc.first, col0 + rc.second, sign * v);
            }
        }
        cc.d.push_back(std::move(d));
    }
    return cc;
}

std::vector<HomologyGroup> row_homology(const DoubleComplex& dc, int q,
                                        const CoefficientSpec& coeff)
{
    if (q < 0 || q > dc.q_max)
        throw std::invalid_argument("row_homology: row index outside grid");
    ChainComplexZ cc;
    cc.dims.resize(dc.p_max + 1);
    cc.d.push_back(IntMatrix(0, dc.dim(0, q)));
    cc.dims[0] = dc.dim(0, q);
    for (int p = 1; p <= dc.p_max; ++p) {
        cc.dims[p] = dc.dim(p, q);
        cc.d.push_back(dc.d_prime[p][q]);
    }
    return homology(cc, coeff);
}

SimplicialComplex nf_complex(const Cover& cover, const Simplex& tau)
{
    if (!cover.base().contains(tau))
        throw std::invalid_argument("nf_complex: simplex not in the base complex");
    std::vector<std::string> labels;
    for (const auto& label : cover.labels())
        if (cover.part(label).contains(tau))
            labels.push_back(label);
    // A valid cover puts tau somewhere, so labels is nonempty.
    return SimplicialComplex::closure({labels});
}

namespace detail {

E1Row build_e1_row(const Cover& cover, int p_max)
{
    const SimplicialComplex n = nerve(cover, p_max);
    E1Row row;
    row.basis.resize(p_max + 1);
    row.cc.dims.assign(p_max + 1, 0);

    std::vector<std::vector<Simplex>> sigmas(p_max + 1);
    std::map<Simplex, Components> comps;
    for (int p = 0; p <= p_max; ++p) {
        sigmas[p] = n.simplices_of_dim(p);
        for (const auto& sigma : sigmas[p]) {
            auto it = comps.emplace(sigma, Components(intersection(cover, sigma.labels())))
                          .first;
            for (const auto& rep : it->second.reps())
                row.basis[p].emplace_back(sigma, rep);
        }
        row.cc.dims[p] = static_cast<int>(row.basis[p].size());
    }

    std::vector<std::map<std::pair<Simplex, VertexId>, int>> index(p_max + 1);
    for (int p = 0; p <= p_max; ++p)
        for (std::size_t i = 0; i < row.basis[p].size(); ++i)
            index[p].emplace(row.basis[p][i], static_cast<int>(i));

    row.cc.d.push_back(IntMatrix(0, row.cc.dims[0]));
    for (int m = 1; m <= p_max; ++m) {
        IntMatrix d(row.cc.dims[m - 1], row.cc.dims[m]);
        for (std::size_t j = 0; j < row.basis[m].size(); ++j) {
            const auto& [sigma, rep] = row.basis[m][j];
            Int sign = 1;
            for (int i = 0; i <= m; ++i) {
                const Simplex face = sigma.face_without(i);
                // rep is a vertex of U_sigma, which sits inside U_face.
                const VertexId target = comps.at(face).rep(rep);
                d.add(index[m - 1].at({face, target}), static_cast<int>(j), sign);
                sign = -sign;
            }
        }
        row.cc.d.push_back(std::move(d));
    }
    return row;
}

}  // namespace detail

ChainComplexZ e1_bottom_row(const DoubleComplex& dc, const Cover& cover)
{
    return detail::build_e1_row(cover, dc.p_max).cc;
}

}  // namespace nervecheck
