#include "nervecheck/snf.hpp"

namespace nervecheck {

namespace {

// Truncated quotient keeps |remainder| < |divisor|, which makes every
// reduction step strictly shrink the candidate pivot.
Int quot(const Int& a, const Int& b) { return a / b; }

}  // namespace

InvariantFactors snf(const IntMatrix& m)
{
    const int R = m.rows();
    const int C = m.cols();
    auto a = m.dense();

    InvariantFactors out;
    int t = 0;
    while (t < R && t < C) {
        // Deterministic pivot: minimal |value|, ties by (row, col).
        int pr = -1, pc = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                if (a[i][j] == 0)
                    continue;
                if (pr < 0 || abs_int(a[i][j]) < abs_int(a[pr][pc])) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0)
            break;  // submatrix is zero; rank reached
        std::swap(a[t], a[pr]);
        for (int i = 0; i < R; ++i)
            std::swap(a[i][t], a[i][pc]);

        // Reduce column t, then row t; a nonzero remainder is strictly
        // smaller than the pivot, so restarting pivot selection terminates.
        bool clean = true;
        for (int i = t + 1; i < R; ++i) {
            if (a[i][t] == 0)
                continue;
            Int q = quot(a[i][t], a[t][t]);
            for (int j = t; j < C; ++j)
                a[i][j] -= q * a[t][j];
            if (a[i][t] != 0)
                clean = false;
        }
        if (!clean)
            continue;
        for (int j = t + 1; j < C; ++j) {
            if (a[t][j] == 0)
                continue;
            Int q = quot(a[t][j], a[t][t]);
            for (int i = t; i < R; ++i)
                a[i][j] -= q * a[i][t];
            if (a[t][j] != 0)
                clean = false;
        }
        if (!clean)
            continue;

        // Divisibility fix: fold a row containing a non-multiple into row t
        // and redo the reduction with a strictly smaller eventual pivot.
        bool divides = true;
        for (int i = t + 1; i < R && divides; ++i)
            for (int j = t + 1; j < C && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (int j2 = t; j2 < C; ++j2)
                        a[t][j2] += a[i][j2];
                    divides = false;
                }
        if (!divides)
            continue;

        out.factors.push_back(abs_int(a[t][t]));
        ++t;
    }
    return out;
}

}  // namespace nervecheck
