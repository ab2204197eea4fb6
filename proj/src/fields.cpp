#include "nervecheck/fields.hpp"

#include <stdexcept>

namespace nervecheck {

CoefficientSpec CoefficientSpec::prime(std::int64_t p)
{
    if (p < 2 || p >= (std::int64_t(1) << 31))
        throw std::invalid_argument("prime field: modulus must be a prime in [2, 2^31)");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("prime field: " + std::to_string(p) + " is not prime");
    return {Kind::prime_field, p};
}

std::string CoefficientSpec::name() const
{
    switch (kind) {
    case Kind::integers: return "z";
    case Kind::rationals: return "q";
    default: return "p:" + std::to_string(p);
    }
}

namespace detail {

DenseInt to_dense(const IntMatrix& m) { return m.dense(); }

namespace {

void primitivize(std::vector<Int>& row)
{
    Int g = 0;
    for (const Int& x : row)
        g = gcd_int(g, x);
    if (g > 1)
        for (Int& x : row)
            x /= g;
}

int leading_index(const std::vector<Int>& row)
{
    for (int j = 0; j < static_cast<int>(row.size()); ++j)
        if (row[j] != 0)
            return j;
    return -1;
}

// Fraction-free reduced echelon over Q.  Rows stay integral throughout:
// elimination uses cross-multiplication and each touched row is divided by
// its content, which keeps entry growth polynomial at this scale.
DenseInt rref_rational(DenseInt a)
{
    const int R = static_cast<int>(a.size());
    const int C = R == 0 ? 0 : static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int pivot = -1;
        for (int i = r; i < R; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[r], a[pivot]);
        for (int j = 0; j < R; ++j) {
            if (j == r || a[j][c] == 0)
                continue;
            const Int pv = a[r][c];
            const Int f = a[j][c];
            for (int k = 0; k < C; ++k)
                a[j][k] = pv * a[j][k] - f * a[r][k];
            primitivize(a[j]);
        }
        ++r;
    }
    a.resize(r);
    for (auto& row : a) {
        primitivize(row);
        int lead = leading_index(row);
        if (lead >= 0 && row[lead] < 0)
            for (Int& x : row)
                x = -x;
    }
    return a;
}

std::int64_t mod_reduce(const Int& x, std::int64_t p)
{
    Int r = x % p;
    if (r < 0)
        r += p;
    return static_cast<std::int64_t>(r);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    // Extended Euclid; a is nonzero mod p and p is prime.
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return ((t % p) + p) % p;
}

DenseInt rref_mod_p(const DenseInt& input, std::int64_t p)
{
    const int R = static_cast<int>(input.size());
    const int C = R == 0 ? 0 : static_cast<int>(input[0].size());
    std::vector<std::vector<std::int64_t>> a(R, std::vector<std::int64_t>(C));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j)
            a[i][j] = mod_reduce(input[i][j], p);

    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int pivot = -1;
        for (int i = r; i < R; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[r], a[pivot]);
        const std::int64_t inv = mod_inverse(a[r][c], p);
        for (int k = 0; k < C; ++k)
            a[r][k] = (a[r][k] * inv) % p;
        for (int j = 0; j < R; ++j) {
            if (j == r || a[j][c] == 0)
                continue;
            const std::int64_t f = a[j][c];
            for (int k = 0; k < C; ++k) {
                a[j][k] = (a[j][k] - f * a[r][k]) % p;
                if (a[j][k] < 0)
                    a[j][k] += p;
            }
        }
        ++r;
    }
    DenseInt out;
    out.reserve(r);
    for (int i = 0; i < r; ++i)
        out.emplace_back(a[i].begin(), a[i].end());
    return out;
}

}  // namespace

DenseInt rref_over(DenseInt a, const CoefficientSpec& coeff)
{
    switch (coeff.kind) {
    case CoefficientSpec::Kind::rationals:
        return rref_rational(std::move(a));
    case CoefficientSpec::Kind::prime_field:
        return rref_mod_p(a, coeff.p);
    default:
        throw std::invalid_argument("rref_over: integer coefficients are not a field");
    }
}

int rank_over(const DenseInt& a, const CoefficientSpec& coeff)
{
    return static_cast<int>(rref_over(a, coeff).size());
}

DenseInt kernel_over(const DenseInt& a, int cols, const CoefficientSpec& coeff)
{
    const DenseInt rr = rref_over(a, coeff);
    std::vector<int> pivot_col(rr.size());
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < rr.size(); ++i) {
        pivot_col[i] = leading_index(rr[i]);
        is_pivot[pivot_col[i]] = true;
    }

    DenseInt basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Int> v(cols, Int(0));
        if (coeff.kind == CoefficientSpec::Kind::rationals) {
            // Scale the free variable so every pivot solve stays integral.
            Int scale = 1;
            for (std::size_t i = 0; i < rr.size(); ++i)
                if (rr[i][f] != 0)
                    scale = lcm_int(scale, rr[i][pivot_col[i]]);
            v[f] = scale;
            for (std::size_t i = 0; i < rr.size(); ++i)
                if (rr[i][f] != 0)
                    v[pivot_col[i]] = -rr[i][f] * (scale / rr[i][pivot_col[i]]);
            primitivize(v);
            int lead = leading_index(v);
            if (lead >= 0 && v[lead] < 0)
                for (Int& x : v)
                    x = -x;
        } else {
            const std::int64_t p = coeff.p;
            v[f] = 1;
            for (std::size_t i = 0; i < rr.size(); ++i)
                if (rr[i][f] != 0)
                    v[pivot_col[i]] = (p - mod_reduce(rr[i][f], p)) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

int rank(const IntMatrix& m, const CoefficientSpec& coeff)
{
    if (!coeff.is_field())
        throw std::invalid_argument("rank: integer coefficients have no rank function here; "
                                    "use snf for Z-module structure");
    return detail::rank_over(m.dense(), coeff);
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m, const CoefficientSpec& coeff)
{
    if (!coeff.is_field())
        throw std::invalid_argument("kernel_basis: coefficients must form a field");
    return detail::kernel_over(m.dense(), m.cols(), coeff);
}

}  // namespace nervecheck
