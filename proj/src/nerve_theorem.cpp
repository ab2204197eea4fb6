#include "nervecheck/nerve_theorem.hpp"

#include <algorithm>
#include <sstream>

#include "nervecheck/snf.hpp"

namespace nervecheck {

namespace {

// Distinct sigmas of a degree's E^1 basis, in order.  Every nerve simplex of
// that degree appears: U_sigma is nonempty, so it has at least one component.
std::vector<Simplex> distinct_sigmas(const std::vector<std::pair<Simplex, VertexId>>& basis)
{
    std::vector<Simplex> rows;
    for (const auto& entry : basis)
        if (rows.empty() || rows.back() != entry.first)
            rows.push_back(entry.first);
    return rows;
}

IntMatrix g_from_basis(const std::vector<std::pair<Simplex, VertexId>>& basis)
{
    const std::vector<Simplex> rows = distinct_sigmas(basis);
    IntMatrix g(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
    for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
        const auto it = std::lower_bound(rows.begin(), rows.end(), basis[col].first);
        g.set(static_cast<int>(it - rows.begin()), col, 1);
    }
    return g;
}

std::string join_labels(const std::vector<std::string>& labels)
{
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0)
            out += ",";
        out += labels[i];
    }
    return out + "}";
}

}  // namespace

HypothesisReport check_hypotheses(const Cover& cover, int k)
{
    if (k < 0)
        throw std::invalid_argument("check_hypotheses: k must be >= 0");

    HypothesisReport rep;
    rep.k = k;
    const SimplicialComplex nv = nerve(cover, k);
    for (const Simplex& sigma : nv.simplices()) {
        const int bound = k - sigma.dim();
        const SimplicialComplex u = intersection(cover, sigma.labels());
        const auto h = homology(u, CoefficientSpec::integers(), /*reduced=*/true);
        for (int j = 0; j <= bound; ++j) {
            const HomologyGroup g = group_at(h, j);
            if (!g.is_zero())
                rep.violations.push_back({sigma.labels(), j, g});
        }
    }
    rep.passed = rep.violations.empty();
    return rep;
}

IntMatrix g_map(const Cover& cover, int m)
{
    if (m < 0)
        throw std::invalid_argument("g_map: degree must be >= 0");
    const detail::E1Row row = detail::build_e1_row(cover, m);
    return g_from_basis(row.basis[m]);
}

bool g_square_commutes(const IntMatrix& g_prev, const IntMatrix& e1_d,
                       const IntMatrix& nerve_d, const IntMatrix& g_cur)
{
    return g_prev * e1_d == nerve_d * g_cur;
}

bool check_g_chain_map(const Cover& cover, int m_max)
{
    if (m_max < 0)
        throw std::invalid_argument("check_g_chain_map: m_max must be >= 0");

    const detail::E1Row row = detail::build_e1_row(cover, m_max);
    const SimplicialComplex nv = nerve(cover, m_max);
    std::vector<IntMatrix> g;
    g.reserve(m_max + 1);
    for (int m = 0; m <= m_max; ++m)
        g.push_back(g_from_basis(row.basis[m]));
    for (int m = 1; m <= m_max; ++m)
        if (!g_square_commutes(g[m - 1], row.cc.boundary(m), boundary_matrix(nv, m), g[m]))
            return false;
    return true;
}

TheoremReport check_theorem(const Cover& cover, int k, bool with_trace)
{
    if (k < 0)
        throw std::invalid_argument("check_theorem: k must be >= 0");

    TheoremReport rep;
    rep.k = k;
    rep.hypothesis = check_hypotheses(cover, k);

    // Truncating the nerve at dimension k+2 leaves C_j unchanged for
    // j <= k+2, hence homology unchanged for j <= k+1: every compared degree.
    const SimplicialComplex nv = nerve(cover, k + 2);
    const auto hb = homology(cover.base(), CoefficientSpec::integers());
    const auto hn = homology(nv, CoefficientSpec::integers());
    for (int j = 0; j <= k + 1; ++j) {
        rep.h_base.push_back(group_at(hb, j));
        rep.h_nerve.push_back(group_at(hn, j));
    }
    for (int j = 0; j <= k; ++j)
        rep.conclusion1.push_back(rep.h_base[j] == rep.h_nerve[j]);
    if (rep.h_nerve[k + 1].is_zero())
        rep.conclusion2 = Conclusion2::vacuous;
    else if (!rep.h_base[k + 1].is_zero())
        rep.conclusion2 = Conclusion2::confirmed;
    else
        rep.conclusion2 = Conclusion2::violated;

    if (with_trace) {
        ProofTrace tr;
        const detail::E1Row row = detail::build_e1_row(cover, k + 2);
        const auto e2 = homology(row.cc, CoefficientSpec::integers());
        for (int m = 0; m <= k + 1; ++m)
            tr.e2_bottom.push_back(group_at(e2, m));

        std::vector<IntMatrix> g;
        g.reserve(k + 3);
        for (int m = 0; m <= k + 2; ++m)
            g.push_back(g_from_basis(row.basis[m]));

        tr.chain_map_ok = true;
        for (int m = 1; m <= k + 2; ++m)
            if (!g_square_commutes(g[m - 1], row.cc.boundary(m), boundary_matrix(nv, m), g[m]))
                tr.chain_map_ok = false;

        for (int m = 0; m <= k + 1; ++m) {
            GMapCheck check;
            check.m = m;
            check.rows = g[m].rows();
            check.cols = g[m].cols();
            const auto inv = snf(g[m]).factors;
            check.rank = static_cast<int>(inv.size());
            check.iso = check.rows == check.cols && check.rank == check.rows &&
                        std::all_of(inv.begin(), inv.end(), [](const Int& f) { return f == 1; });
            tr.g_maps.push_back(check);
        }

        tr.e2_matches_nerve = true;
        for (int m = 0; m <= k; ++m)
            if (tr.e2_bottom[m] != rep.h_nerve[m])
                tr.e2_matches_nerve = false;

        // A surjection of finitely generated abelian groups forces both the
        // rational rank and the minimal generator count of the source to
        // dominate the target's.
        const auto gens = [](const HomologyGroup& g) {
            return g.free_rank + static_cast<int>(g.torsion.size());
        };
        tr.surjection_rank_ok =
            tr.e2_bottom[k + 1].free_rank >= rep.h_nerve[k + 1].free_rank &&
            gens(tr.e2_bottom[k + 1]) >= gens(rep.h_nerve[k + 1]);

        rep.trace = std::move(tr);
    }

    if (rep.hypothesis.passed) {
        std::ostringstream why;
        for (int j = 0; j <= k; ++j)
            if (!rep.conclusion1[j])
                why << " H_" << j << "(X) != H_" << j << "(N);";
        if (rep.conclusion2 == Conclusion2::violated)
            why << " H_" << (k + 1) << "(N) != 0 but H_" << (k + 1) << "(X) = 0;";
        const std::string tail = why.str();
        if (!tail.empty()) {
            std::ostringstream msg;
            msg << "theorem falsified at level k=" << k << ":" << tail
                << " hypotheses held on all " << join_labels(cover.labels())
                << " intersections";
            throw TheoremFalsified(msg.str(), rep);
        }
    }
    return rep;
}

}  // namespace nervecheck
