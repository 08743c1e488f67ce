#pragma once

// Integer admissible matrices: nonnegative integer matrices with the same
// shape as a gridding matrix, zero on blank cells.  These record how many
// points of a gridded permutation sit in each cell.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gridclass/matrix.hpp"

namespace gridclass {

struct CellCountMatrix {
    int cols = 0, rows = 0;
    std::vector<std::int64_t> counts;  // (row-1)*cols + (col-1), rows from the bottom

    CellCountMatrix() = default;
    CellCountMatrix(int cols_, int rows_) : cols(cols_), rows(rows_), counts(static_cast<std::size_t>(cols_) * rows_, 0) {}

    std::int64_t at(int col, int row) const { return counts[static_cast<std::size_t>(row - 1) * cols + (col - 1)]; }
    std::int64_t& at(int col, int row) { return counts[static_cast<std::size_t>(row - 1) * cols + (col - 1)]; }

    std::int64_t weight() const {
        std::int64_t w = 0;
        for (auto v : counts) w += v;
        return w;
    }

    bool admissible_for(const GridMatrix& m) const {
        if (cols != m.cols() || rows != m.rows()) return false;
        for (int i = 1; i <= cols; ++i)
            for (int j = 1; j <= rows; ++j) {
                if (at(i, j) < 0) return false;
                if (!nonblank(m.at(i, j)) && at(i, j) != 0) return false;
            }
        return true;
    }

    std::int64_t row_sum(int row) const {
        std::int64_t s = 0;
        for (int i = 1; i <= cols; ++i) s += at(i, row);
        return s;
    }
    std::int64_t col_sum(int col) const {
        std::int64_t s = 0;
        for (int j = 1; j <= rows; ++j) s += at(col, j);
        return s;
    }
};

// Visit every admissible matrix of the given weight.
inline void for_each_admissible(const GridMatrix& m, std::int64_t weight,
                                const std::function<void(const CellCountMatrix&)>& fn) {
    auto cells = m.nonblank_cells();
    CellCountMatrix a(m.cols(), m.rows());
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t rest) {
        if (k + 1 == cells.size()) {
            a.at(cells[k].col, cells[k].row) = rest;
            fn(a);
            a.at(cells[k].col, cells[k].row) = 0;
            return;
        }
        for (std::int64_t v = 0; v <= rest; ++v) {
            a.at(cells[k].col, cells[k].row) = v;
            rec(k + 1, rest - v);
        }
        a.at(cells[k].col, cells[k].row) = 0;
    };
    if (cells.empty()) throw std::invalid_argument("matrix has no non-blank cell");
    rec(0, weight);
}

}  // namespace gridclass
