#include "nervecheck/spectral.hpp"

#include <stdexcept>
#include <tuple>

namespace nervecheck {

namespace {

/// Shared state for one spectral sequence run; memoizes the cycle spaces
/// Z^r(s, n) across pages, since consecutive pages reuse most of them.
struct Engine {
    const DoubleComplex& dc;
    FiltrationSide side;
    CoefficientSpec field;
    ChainComplexZ tot;
    int s_max;
    int t_max;
    int n_max;
    std::vector<std::vector<int>> offset;  // [n][p] block starts, as in total_complex
    std::map<std::tuple<int, int, int>, Subspace> z_memo;
    std::map<std::pair<int, int>, Subspace> f_memo;

    Engine(const DoubleComplex& d, FiltrationSide sd, const CoefficientSpec& f)
        : dc(d), side(sd), field(f), tot(total_complex(d))
    {
        s_max = side == FiltrationSide::first ? dc.p_max : dc.q_max;
        t_max = side == FiltrationSide::first ? dc.q_max : dc.p_max;
        n_max = dc.p_max + dc.q_max;
        offset.assign(n_max + 1, std::vector<int>(dc.p_max + 2, 0));
        for (int n = 0; n <= n_max; ++n) {
            int acc = 0;
            for (int p = 0; p <= dc.p_max; ++p) {
                offset[n][p] = acc;
                acc += dc.dim(p, n - p);
            }
            offset[n][dc.p_max + 1] = acc;
        }
    }

    int dim_t(int n) const { return (n < 0 || n > n_max) ? 0 : tot.dims[n]; }

    /// Coordinates of F_s T_n.  The blocks of T_n are ordered by increasing
    /// p; filtering by p <= s keeps a prefix, filtering by q = n - p <= s
    /// keeps a suffix.
    std::vector<int> filtration_coords(int s, int n) const
    {
        std::vector<int> idx;
        if (n < 0 || n > n_max || s < 0)
            return idx;
        int lo, hi;  // block range [lo, hi] in p
        if (side == FiltrationSide::first) {
            lo = 0;
            hi = std::min(s, dc.p_max);
        } else {
            lo = std::min(std::max(0, n - s), dc.p_max + 1);
            hi = dc.p_max;
        }
        if (lo > hi)
            return idx;
        for (int i = offset[n][lo]; i < offset[n][hi + 1]; ++i)
            idx.push_back(i);
        return idx;
    }

    const Subspace& filtration(int s, int n)
    {
        s = std::max(s, -1);
        s = std::min(s, s_max);
        auto key = std::make_pair(s, n);
        auto it = f_memo.find(key);
        if (it == f_memo.end())
            it = f_memo
                     .emplace(key, Subspace::coordinate(field, dim_t(n),
                                                        filtration_coords(s, n)))
                     .first;
        return it->second;
    }

    /// Z^r(s, n) = F_s T_n intersect d^{-1}(F_{s-r} T_{n-1}).  The drop
    /// index s - r is clamped independently of s: F is constant above s_max
    /// and below -1, but s - r must be taken before clamping s or the
    /// boundary terms Z^{r-1}(s + r - 1, n + 1) come out too small.
    const Subspace& cycles(int r, int s, int n)
    {
        const int drop = std::max(std::min(s - r, s_max), -1);
        s = std::max(std::min(s, s_max), -1);
        auto key = std::make_tuple(s, drop, n);
        auto it = z_memo.find(key);
        if (it != z_memo.end())
            return it->second;

        Subspace z = Subspace::zero(field, dim_t(n));
        if (s >= 0 && n >= 0 && n <= n_max) {
            const Subspace& f = filtration(s, n);
            if (drop >= s || n == 0 || f.dim() == 0) {
                // The differential preserves the filtration, and degree 0
                // maps to the zero module: both make the constraint empty.
                z = f;
            } else {
                z = f.intersect(filtration(drop, n - 1).preimage_under(tot.d[n]));
            }
        }
        return z_memo.emplace(key, std::move(z)).first->second;
    }

    int page_dim(int r, int s, int t)
    {
        const int n = s + t;
        if (s < 0 || s > s_max || t < 0 || t > t_max)
            return 0;
        const Subspace& zr = cycles(r, s, n);
        if (zr.dim() == 0)
            return 0;
        Subspace boundary = cycles(r - 1, s + r - 1, n + 1).image_under(
            n + 1 <= n_max ? tot.d[n + 1] : IntMatrix(dim_t(n), 0));
        Subspace denom = cycles(r - 1, s - 1, n).sum(boundary);
        return zr.dim() - denom.dim();
    }
};

}  // namespace

SpectralSequence ss_pages(const DoubleComplex& dc, FiltrationSide side,
                          const CoefficientSpec& field, int r_max)
{
    if (!field.is_field())
        throw std::invalid_argument("ss_pages: spectral pages require field coefficients");
    if (r_max < 1)
        throw std::invalid_argument("ss_pages: need r_max >= 1");

    Engine engine(dc, side, field);
    SpectralSequence out;

    auto page = [&](int r) {
        PageTable table;
        table.r = r;
        for (int s = 0; s <= engine.s_max; ++s)
            for (int t = 0; t <= engine.t_max; ++t) {
                // E^r(s,t) is a subquotient of the block at (s,t); skip
                // cells whose underlying module is already zero.
                const int block = engine.side == FiltrationSide::first
                                      ? dc.dim(s, t)
                                      : dc.dim(t, s);
                if (block == 0)
                    continue;
                const int d = engine.page_dim(r, s, t);
                if (d == 0)
                    continue;
                if (engine.side == FiltrationSide::first)
                    table.dims[{s, t}] = d;
                else
                    table.dims[{t, s}] = d;
            }
        return table;
    };

    for (int r = 1; r <= r_max; ++r)
        out.pages.push_back(page(r));
    PageTable beyond = page(r_max + 1);
    beyond.r = r_max;
    out.stabilized = beyond == out.pages.back();
    return out;
}

}  // namespace nervecheck
