#pragma once

// Independent reference implementations used only by the test suites.
// These deliberately avoid the library's elimination code paths: Smith
// normal forms are cross-checked against gcds of minors, ranks against
// minor enumeration, and subspace dimensions over Z/2 against brute-force
// span enumeration.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "nervecheck/int_matrix.hpp"

namespace oracle {

using nervecheck::Int;
using nervecheck::IntMatrix;

using Dense = std::vector<std::vector<Int>>;

inline Int det_laplace(const Dense& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    Int det = 0;
    Int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][0] != 0) {
            Dense minor;
            minor.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i)
                    continue;
                std::vector<Int> row(a[r].begin() + 1, a[r].end());
                minor.push_back(std::move(row));
            }
            det += sign * a[i][0] * det_laplace(minor);
        }
        sign = -sign;
    }
    return det;
}

inline void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out)
{
    std::vector<int> cur(k);
    // Iterative lexicographic enumeration of k-subsets of {0..n-1}.
    if (k > n)
        return;
    for (int i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
}

/// gcd of the absolute values of all k x k minors; 0 if all vanish.
inline Int minor_gcd(const Dense& a, int k)
{
    const int R = static_cast<int>(a.size());
    const int C = R == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<std::vector<int>> row_sets, col_sets;
    subsets_of_size(R, k, row_sets);
    subsets_of_size(C, k, col_sets);
    Int g = 0;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            Dense sub(k, std::vector<Int>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub[i][j] = a[rs[i]][cs[j]];
            g = nervecheck::gcd_int(g, det_laplace(sub));
        }
    return g < 0 ? Int(-g) : g;
}

/// Rank as the largest k admitting a nonzero k x k minor.
inline int minor_rank(const Dense& a)
{
    const int R = static_cast<int>(a.size());
    const int C = R == 0 ? 0 : static_cast<int>(a[0].size());
    int r = 0;
    for (int k = 1; k <= std::min(R, C); ++k) {
        if (minor_gcd(a, k) == 0)
            break;
        r = k;
    }
    return r;
}

/// Invariant factors from the classical formula d_k = g_k / g_{k-1} where
/// g_k is the gcd of all k x k minors.
inline std::vector<Int> minor_gcd_snf(const Dense& a)
{
    std::vector<Int> factors;
    Int prev = 1;
    const int R = static_cast<int>(a.size());
    const int C = R == 0 ? 0 : static_cast<int>(a[0].size());
    for (int k = 1; k <= std::min(R, C); ++k) {
        Int g = minor_gcd(a, k);
        if (g == 0)
            break;
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

/// Dimension of the span of the given vectors over Z/2 by explicit closure:
/// the span is grown one generator at a time and its size counted.
inline int f2_span_dim(const std::vector<std::vector<int>>& vectors, int ambient)
{
    std::set<std::vector<int>> span;
    span.insert(std::vector<int>(ambient, 0));
    for (const auto& v : vectors) {
        std::vector<std::vector<int>> fresh;
        for (const auto& s : span) {
            std::vector<int> w(ambient);
            for (int i = 0; i < ambient; ++i)
                w[i] = (s[i] + v[i]) % 2;
            if (!span.count(w))
                fresh.push_back(std::move(w));
        }
        for (auto& w : fresh)
            span.insert(std::move(w));
    }
    int dim = 0;
    std::size_t size = span.size();
    while (size > 1) {
        size /= 2;
        ++dim;
    }
    return dim;
}

/// Deterministic test randomness; modulo bias is irrelevant here.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
    int in(int lo, int hi) { return lo + below(hi - lo + 1); }
};

inline IntMatrix random_matrix(Rng& rng, int max_side, int max_abs)
{
    const int r = rng.in(1, max_side);
    const int c = rng.in(1, max_side);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.set(i, j, rng.in(-max_abs, max_abs));
    return m;
}

}  // namespace oracle
