#pragma once

// Gridding matrices and their structural analysis: parsing, cell graphs,
// connectivity and corner detection.
//
// Indexing convention: cell (i, j) is column i from the left, row j from
// the bottom, both 1-based.  Text input and output list rows top-to-bottom
// the way matrices are normally written; the constructor converts.

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridclass {

enum class Cell : signed char { Dec = -1, Blank = 0, Inc = 1 };

inline bool nonblank(Cell c) { return c != Cell::Blank; }

struct CellCoord {
    int col = 0, row = 0;
    friend bool operator==(CellCoord a, CellCoord b) { return a.col == b.col && a.row == b.row; }
    friend bool operator!=(CellCoord a, CellCoord b) { return !(a == b); }
    friend bool operator<(CellCoord a, CellCoord b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    }
};

class GridMatrix {
public:
    GridMatrix(int cols, int rows) : cols_(cols), rows_(rows), cells_(static_cast<std::size_t>(cols) * rows, Cell::Blank) {
        if (cols < 1 || rows < 1) throw std::invalid_argument("matrix dimensions must be positive");
    }

    int cols() const { return cols_; }
    int rows() const { return rows_; }

    Cell at(int col, int row) const { return cells_[index(col, row)]; }
    void set(int col, int row, Cell c) { cells_[index(col, row)] = c; }

    int nonblank_count() const {
        int n = 0;
        for (Cell c : cells_) n += nonblank(c) ? 1 : 0;
        return n;
    }

    std::vector<CellCoord> nonblank_cells() const {
        std::vector<CellCoord> out;
        for (int i = 1; i <= cols_; ++i)
            for (int j = 1; j <= rows_; ++j)
                if (nonblank(at(i, j))) out.push_back({i, j});
        return out;
    }

    // single row, every cell non-blank
    bool is_skinny() const {
        if (rows_ != 1) return false;
        for (int i = 1; i <= cols_; ++i)
            if (!nonblank(at(i, 1))) return false;
        return true;
    }

    // Text rows are written top-to-bottom; ';' or newline separates rows.
    static GridMatrix parse(const std::string& text) {
        std::vector<std::vector<int>> rows_top_down;
        std::string row_buf;
        auto flush_row = [&]() {
            std::istringstream is(row_buf);
            std::vector<int> entries;
            std::string tok;
            while (is >> tok) {
                if (tok == "1") entries.push_back(1);
                else if (tok == "-1") entries.push_back(-1);
                else if (tok == "0") entries.push_back(0);
                else throw std::invalid_argument("matrix entry must be 1, -1 or 0, got '" + tok + "'");
            }
            if (!entries.empty()) rows_top_down.push_back(std::move(entries));
            row_buf.clear();
        };
        for (char ch : text) {
            if (ch == ';' || ch == '\n') flush_row();
            else row_buf += ch;
        }
        flush_row();

        if (rows_top_down.empty()) throw std::invalid_argument("empty matrix text");
        std::size_t width = rows_top_down.front().size();
        for (const auto& r : rows_top_down)
            if (r.size() != width) throw std::invalid_argument("ragged matrix rows");

        GridMatrix m(static_cast<int>(width), static_cast<int>(rows_top_down.size()));
        int u = m.rows();
        for (int jr = 0; jr < u; ++jr)
            for (int i = 0; i < m.cols(); ++i)
                m.set(i + 1, u - jr, static_cast<Cell>(rows_top_down[jr][i]));
        if (m.nonblank_count() == 0) throw std::invalid_argument("matrix has no non-blank cell");
        return m;
    }

    std::string serialize() const {
        std::ostringstream os;
        for (int j = rows_; j >= 1; --j) {
            if (j != rows_) os << "; ";
            for (int i = 1; i <= cols_; ++i) {
                if (i != 1) os << ' ';
                os << static_cast<int>(at(i, j));
            }
        }
        return os.str();
    }

    friend bool operator==(const GridMatrix& a, const GridMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_ && a.cells_ == b.cells_;
    }

    // Nearest non-blank cell strictly in the given direction along the row
    // or column of (col, row); cells in between are blank by construction.
    std::optional<CellCoord> neighbor(int col, int row, int dcol, int drow) const {
        int i = col + dcol, j = row + drow;
        while (i >= 1 && i <= cols_ && j >= 1 && j <= rows_) {
            if (nonblank(at(i, j))) return CellCoord{i, j};
            i += dcol;
            j += drow;
        }
        return std::nullopt;
    }

private:
    std::size_t index(int col, int row) const {
        if (col < 1 || col > cols_ || row < 1 || row > rows_) throw std::out_of_range("cell index");
        return static_cast<std::size_t>(row - 1) * cols_ + (col - 1);
    }

    int cols_, rows_;
    std::vector<Cell> cells_;
};

struct CellGraph {
    std::vector<CellCoord> vertices;
    std::vector<std::pair<CellCoord, CellCoord>> edges;  // each pair ordered, list sorted
};

// Two cells are adjacent iff they share a row or a column and every cell
// strictly between them is blank.
inline CellGraph cell_graph(const GridMatrix& m) {
    CellGraph g;
    g.vertices = m.nonblank_cells();
    for (const auto& v : g.vertices) {
        auto right = m.neighbor(v.col, v.row, +1, 0);
        if (right) g.edges.emplace_back(v, *right);
        auto up = m.neighbor(v.col, v.row, 0, +1);
        if (up) g.edges.emplace_back(v, *up);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline bool is_connected(const GridMatrix& m) {
    CellGraph g = cell_graph(m);
    if (g.vertices.empty()) return false;
    std::set<CellCoord> seen;
    std::vector<CellCoord> stack{g.vertices.front()};
    seen.insert(g.vertices.front());
    while (!stack.empty()) {
        CellCoord v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : g.edges) {
            CellCoord other;
            if (a == v) other = b;
            else if (b == v) other = a;
            else continue;
            if (seen.insert(other).second) stack.push_back(other);
        }
    }
    return seen.size() == g.vertices.size();
}

// A corner has another non-blank cell somewhere in its row and another
// somewhere in its column.
inline std::vector<CellCoord> corner_cells(const GridMatrix& m) {
    std::vector<CellCoord> corners;
    for (const auto& v : m.nonblank_cells()) {
        bool row_mate = false, col_mate = false;
        for (int i = 1; i <= m.cols(); ++i)
            if (i != v.col && nonblank(m.at(i, v.row))) row_mate = true;
        for (int j = 1; j <= m.rows(); ++j)
            if (j != v.row && nonblank(m.at(v.col, j))) col_mate = true;
        if (row_mate && col_mate) corners.push_back(v);
    }
    return corners;
}

}  // namespace gridclass
