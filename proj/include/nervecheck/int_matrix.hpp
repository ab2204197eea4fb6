#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nervecheck/integers.hpp"

namespace nervecheck {

/// Sparse integer matrix with exact arbitrary-precision entries.
///
/// Entries are kept in a row-major ordered map; zero entries are never
/// stored, so equality of the entry maps is equality of matrices.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Entry at (r, c); zero if absent.  Throws std::out_of_range on bad indices.
    Int at(int r, int c) const;

    /// Sets entry (r, c), erasing it when v == 0.
    void set(int r, int c, Int v);

    /// Adds v to entry (r, c).
    void add(int r, int c, const Int& v);

    const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }

    static IntMatrix identity(int n);

    /// Matrix product; dimensions must agree.
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const;
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    /// M . v with exact arithmetic; v.size() must equal cols().
    std::vector<Int> apply(const std::vector<Int>& v) const;

    /// Dense copy, row-major.
    std::vector<std::vector<Int>> dense() const;

private:
    void check_index(int r, int c) const;

    int rows_;
    int cols_;
    std::map<std::pair<int, int>, Int> entries_;
};

}  // namespace nervecheck
