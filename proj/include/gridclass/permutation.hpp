#pragma once

// Permutations, griddings and gridded permutations.
//
// A gridding of an n-permutation by a t x u matrix is a pair of
// nondecreasing divider sequences 0 = c_0 <= ... <= c_t = n and
// 0 = r_0 <= ... <= r_u = n; the points with index in (c_{i-1}, c_i] and
// value in (r_{j-1}, r_j] form cell (i, j) and must be increasing,
// decreasing or empty according to the matrix entry.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridclass/matrix.hpp"

namespace gridclass {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) { validate(); }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return Permutation(std::move(v));
    }

    // Accepts "8 7 9 6 1 4 2 3 5", "8,7,9,..." and the compact digit form
    // "879614235" for n <= 9.
    static Permutation parse(const std::string& text) {
        std::string cleaned = text;
        for (char& ch : cleaned)
            if (ch == ',') ch = ' ';
        std::istringstream is(cleaned);
        std::vector<std::string> tokens;
        std::string tok;
        while (is >> tok) tokens.push_back(tok);
        if (tokens.empty()) throw std::invalid_argument("empty permutation text");
        std::vector<int> vals;
        if (tokens.size() == 1 && tokens[0].size() > 1) {
            for (char ch : tokens[0]) {
                if (ch < '1' || ch > '9') throw std::invalid_argument("compact permutation form allows digits 1-9 only");
                vals.push_back(ch - '0');
            }
        } else {
            for (const auto& t : tokens) {
                std::size_t pos = 0;
                int v = std::stoi(t, &pos);
                if (pos != t.size()) throw std::invalid_argument("bad permutation value '" + t + "'");
                vals.push_back(v);
            }
        }
        return Permutation(std::move(vals));
    }

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int pos) const { return values_[static_cast<std::size_t>(pos) - 1]; }  // 1-based
    const std::vector<int>& values() const { return values_; }

    // position of a value, 1-based
    int index_of(int value) const { return inverse_[static_cast<std::size_t>(value) - 1]; }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t k = 0; k < values_.size(); ++k) {
            if (k) os << ' ';
            os << values_[k];
        }
        return os.str();
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.values_ == b.values_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.values_ < b.values_; }

private:
    void validate() {
        int n = static_cast<int>(values_.size());
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        inverse_.assign(values_.size(), 0);
        for (int pos = 1; pos <= n; ++pos) {
            int v = values_[static_cast<std::size_t>(pos) - 1];
            if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
            seen[v] = 1;
            inverse_[static_cast<std::size_t>(v) - 1] = pos;
        }
    }

    std::vector<int> values_;
    std::vector<int> inverse_;
};

// Interior dividers only: col_divs has t-1 entries, row_divs has u-1.
struct Gridding {
    std::vector<int> col_divs;
    std::vector<int> row_divs;

    friend bool operator==(const Gridding& a, const Gridding& b) {
        return a.col_divs == b.col_divs && a.row_divs == b.row_divs;
    }
    friend bool operator<(const Gridding& a, const Gridding& b) {
        return a.col_divs != b.col_divs ? a.col_divs < b.col_divs : a.row_divs < b.row_divs;
    }

    // "cols=[2,6] rows=[1]"
    std::string str() const {
        auto list = [](const std::vector<int>& v) {
            std::ostringstream os;
            os << '[';
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (k) os << ',';
                os << v[k];
            }
            os << ']';
            return os.str();
        };
        return "cols=" + list(col_divs) + " rows=" + list(row_divs);
    }

    static Gridding parse(const std::string& text) {
        auto grab = [&](const std::string& key) {
            auto at = text.find(key + "=[");
            if (at == std::string::npos) throw std::invalid_argument("gridding text needs " + key + "=[...]");
            auto close = text.find(']', at);
            if (close == std::string::npos) throw std::invalid_argument("unterminated divider list");
            std::string body = text.substr(at + key.size() + 2, close - at - key.size() - 2);
            std::vector<int> out;
            std::istringstream is(body);
            std::string tok;
            while (std::getline(is, tok, ',')) if (!tok.empty()) out.push_back(std::stoi(tok));
            return out;
        };
        return Gridding{grab("cols"), grab("rows")};
    }
};

struct GriddedPerm {
    GridMatrix matrix;
    Permutation perm;
    Gridding gridding;
};

namespace detail {
inline int band_of(const std::vector<int>& interior, int n, int x) {
    // band index (1-based) of coordinate x in the partition given by dividers
    int b = 1;
    for (int d : interior) {
        if (x <= d) return b;
        ++b;
    }
    (void)n;
    return b;
}
}  // namespace detail

// Direct check of the cell conditions.
inline bool is_valid_gridding(const GridMatrix& m, const Permutation& p, const Gridding& g) {
    int n = p.size();
    if (static_cast<int>(g.col_divs.size()) != m.cols() - 1) return false;
    if (static_cast<int>(g.row_divs.size()) != m.rows() - 1) return false;
    int prev = 0;
    for (int d : g.col_divs) {
        if (d < prev || d > n) return false;
        prev = d;
    }
    prev = 0;
    for (int d : g.row_divs) {
        if (d < prev || d > n) return false;
        prev = d;
    }
    // last index seen per cell, +: ascending required, -: descending
    std::vector<int> last(static_cast<std::size_t>(m.cols()) * m.rows() + 1, 0);
    for (int value = 1; value <= n; ++value) {
        int idx = p.index_of(value);
        int ci = detail::band_of(g.col_divs, n, idx);
        int rj = detail::band_of(g.row_divs, n, value);
        Cell cell = m.at(ci, rj);
        if (cell == Cell::Blank) return false;
        std::size_t key = static_cast<std::size_t>(rj - 1) * m.cols() + (ci - 1) + 1;
        int prev_idx = last[key];
        if (prev_idx != 0) {
            if (cell == Cell::Inc && idx < prev_idx) return false;
            if (cell == Cell::Dec && idx > prev_idx) return false;
        }
        last[key] = idx;
    }
    return true;
}

}  // namespace gridclass
