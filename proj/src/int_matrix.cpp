#include "nervecheck/int_matrix.hpp"

#include <stdexcept>
#include <string>

namespace nervecheck {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("IntMatrix: negative dimension");
}

void IntMatrix::check_index(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("IntMatrix: index (" + std::to_string(r) + ", " +
                                std::to_string(c) + ") outside " + std::to_string(rows_) +
                                "x" + std::to_string(cols_));
}

Int IntMatrix::at(int r, int c) const
{
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Int(0) : it->second;
}

void IntMatrix::set(int r, int c, Int v)
{
    check_index(r, c);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void IntMatrix::add(int r, int c, const Int& v)
{
    check_index(r, c);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        if (v != 0)
            entries_.emplace(std::make_pair(r, c), v);
        return;
    }
    it->second += v;
    if (it->second == 0)
        entries_.erase(it);
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("IntMatrix: product dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (const auto& [rc, v] : entries_) {
        const auto [i, k] = rc;
        // Row k of the right factor is a contiguous range in its ordered map.
        auto it = other.entries_.lower_bound({k, 0});
        for (; it != other.entries_.end() && it->first.first == k; ++it)
            out.add(i, it->first.second, v * it->second);
    }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("IntMatrix: difference dimension mismatch");
    IntMatrix out = *this;
    for (const auto& [rc, v] : other.entries_)
        out.add(rc.first, rc.second, -v);
    return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("IntMatrix: apply dimension mismatch");
    std::vector<Int> out(rows_, Int(0));
    for (const auto& [rc, e] : entries_)
        out[rc.first] += e * v[rc.second];
    return out;
}

std::vector<std::vector<Int>> IntMatrix::dense() const
{
    std::vector<std::vector<Int>> out(rows_, std::vector<Int>(cols_, Int(0)));
    for (const auto& [rc, v] : entries_)
        out[rc.first][rc.second] = v;
    return out;
}

}  // namespace nervecheck
