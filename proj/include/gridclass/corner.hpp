#pragma once

// Corner analysis for connected one-corner classes.
//
// A corner cell together with its nearest non-blank neighbours forms an
// L, T or X configuration.  Each (row-arm, column-arm) pair around the
// corner spans a 2x2 block; when the two arms sit on the block diagonal
// with matching orientation they form a diagonal (corner oriented the
// same way) or a tee (corner oriented the opposite way).  Opposite
// orientation between the corner and an arm otherwise gives a corner
// peak, whose axis (horizontal or vertical) decides which column of the
// correction-factor table applies.
//
// The oriented configurations reduce to eleven representatives via a
// hard-coded lookup generated from the block analysis.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridclass/matrix.hpp"

namespace gridclass {

enum class CornerType { L0, L1, L3, L4, L7, T2, T4, T5, X0, X4, X7 };

inline const char* corner_type_name(CornerType t) {
    switch (t) {
        case CornerType::L0: return "L0";
        case CornerType::L1: return "L1";
        case CornerType::L3: return "L3";
        case CornerType::L4: return "L4";
        case CornerType::L7: return "L7";
        case CornerType::T2: return "T2";
        case CornerType::T4: return "T4";
        case CornerType::T5: return "T5";
        case CornerType::X0: return "X0";
        case CornerType::X4: return "X4";
        case CornerType::X7: return "X7";
    }
    return "?";
}

inline std::optional<CornerType> corner_type_from_name(const std::string& s) {
    static const std::array<CornerType, 11> all = {
        CornerType::L0, CornerType::L1, CornerType::L3, CornerType::L4, CornerType::L7,
        CornerType::T2, CornerType::T4, CornerType::T5, CornerType::X0, CornerType::X4, CornerType::X7};
    for (CornerType t : all)
        if (s == corner_type_name(t)) return t;
    return std::nullopt;
}

struct CornerProfile {
    CellCoord corner;
    CornerType representative = CornerType::L0;
    bool rotated = false;  // true when the 90-degree-rotated factor column applies
    int r = 0;             // column cells (main column, corner excluded)
    int c = 0;             // row cells
    int non_corner_peaks = 0;
};

enum class BlockKind { None, Diagonal, Tee };

// Corner orientation plus one row arm (left/right) and one column arm
// (below/above).  The two arms lie on the NE-SW diagonal of their 2x2
// block when the row arm's side and the column arm's side "disagree"
// (right+below or left+above); NE-SW pairs align when increasing, NW-SE
// pairs when decreasing.
inline BlockKind block_kind(Cell corner, Cell row_arm, bool row_arm_right, Cell col_arm, bool col_arm_up) {
    bool ne_sw = (row_arm_right != col_arm_up);
    Cell aligned = ne_sw ? Cell::Inc : Cell::Dec;
    if (row_arm != aligned || col_arm != aligned) return BlockKind::None;
    return corner == aligned ? BlockKind::Diagonal : BlockKind::Tee;
}

// Local structure of one corner: arm orientations per side, block kinds,
// and the corner peaks that are not absorbed into a tee.
struct CornerLocalStructure {
    CellCoord corner{};
    Cell orientation = Cell::Blank;
    std::optional<Cell> arm_left, arm_right, arm_down, arm_up;
    int diagonals = 0;
    int tees = 0;
    int horizontal_peaks = 0;  // corner peaks along the main row
    int vertical_peaks = 0;    // corner peaks along the main column
    // divider pairs of diagonal / tee crossings, as (col divider, row divider)
    std::vector<std::pair<int, int>> diagonal_crossings;
    std::vector<std::pair<int, int>> tee_crossings;
    // dividers carrying an unabsorbed corner peak: (is_column_axis, index)
    std::vector<std::pair<bool, int>> peak_dividers;
};

inline CornerLocalStructure corner_local_structure(const GridMatrix& m, CellCoord corner) {
    CornerLocalStructure s;
    s.corner = corner;
    s.orientation = m.at(corner.col, corner.row);
    auto arm = [&](int dc, int dr) -> std::optional<Cell> {
        auto nb = m.neighbor(corner.col, corner.row, dc, dr);
        if (!nb) return std::nullopt;
        return m.at(nb->col, nb->row);
    };
    s.arm_left = arm(-1, 0);
    s.arm_right = arm(+1, 0);
    s.arm_down = arm(0, -1);
    s.arm_up = arm(0, +1);

    bool absorbed_left = false, absorbed_right = false, absorbed_down = false, absorbed_up = false;
    auto consider = [&](std::optional<Cell> row_arm, bool right, std::optional<Cell> col_arm, bool up,
                        bool& row_absorbed, bool& col_absorbed) {
        if (!row_arm || !col_arm) return;
        BlockKind k = block_kind(s.orientation, *row_arm, right, *col_arm, up);
        int cd = right ? corner.col : corner.col - 1;
        int rd = up ? corner.row : corner.row - 1;
        if (k == BlockKind::Diagonal) {
            ++s.diagonals;
            s.diagonal_crossings.emplace_back(cd, rd);
        } else if (k == BlockKind::Tee) {
            ++s.tees;
            s.tee_crossings.emplace_back(cd, rd);
            row_absorbed = true;
            col_absorbed = true;
        }
    };
    consider(s.arm_right, true, s.arm_down, false, absorbed_right, absorbed_down);
    consider(s.arm_left, false, s.arm_down, false, absorbed_left, absorbed_down);
    consider(s.arm_right, true, s.arm_up, true, absorbed_right, absorbed_up);
    consider(s.arm_left, false, s.arm_up, true, absorbed_left, absorbed_up);

    auto peak = [&](std::optional<Cell> a, bool absorbed, bool horizontal, bool positive_side) {
        if (!a || absorbed || *a == s.orientation) return;
        if (horizontal) ++s.horizontal_peaks;
        else ++s.vertical_peaks;
        int idx = horizontal ? (positive_side ? corner.col : corner.col - 1)
                             : (positive_side ? corner.row : corner.row - 1);
        s.peak_dividers.emplace_back(horizontal, idx);
    };
    peak(s.arm_left, absorbed_left, true, false);
    peak(s.arm_right, absorbed_right, true, true);
    peak(s.arm_down, absorbed_down, false, false);
    peak(s.arm_up, absorbed_up, false, true);
    return s;
}

struct StructureCounts {
    int corner_peaks = 0;
    int non_corner_peaks = 0;
    int diagonals = 0;
    int tees = 0;
};

// Peaks are cell-graph-adjacent pairs of opposite orientation; the two
// corner-arm pairs of a tee count as the tee, not as peaks.
inline StructureCounts peaks_diagonals_tees(const GridMatrix& m) {
    StructureCounts out;
    auto corners = corner_cells(m);
    auto is_corner = [&](CellCoord v) {
        for (auto c : corners)
            if (c == v) return true;
        return false;
    };
    std::vector<std::pair<CellCoord, CellCoord>> absorbed;
    for (auto corner : corners) {
        CornerLocalStructure s = corner_local_structure(m, corner);
        out.diagonals += s.diagonals;
        out.tees += s.tees;
        // reconstruct which corner-arm edges the tees absorbed
        auto note = [&](int dc, int dr) {
            auto nb = m.neighbor(corner.col, corner.row, dc, dr);
            if (nb) absorbed.emplace_back(corner, *nb);
        };
        for (auto [cd, rd] : s.tee_crossings) {
            note(cd == corner.col ? +1 : -1, 0);
            note(0, rd == corner.row ? +1 : -1);
        }
    }
    for (const auto& [a, b] : cell_graph(m).edges) {
        if (m.at(a.col, a.row) == m.at(b.col, b.row)) continue;
        bool is_absorbed = false;
        for (const auto& [x, y] : absorbed)
            if ((a == x && b == y) || (a == y && b == x)) is_absorbed = true;
        if (is_absorbed) continue;
        if (is_corner(a) || is_corner(b)) ++out.corner_peaks;
        else ++out.non_corner_peaks;
    }
    return out;
}

namespace detail {

struct TypeFlag {
    CornerType type;
    bool rotated;
};

// Lookup tables for the oriented corner configurations, indexed by the
// orientation bits (Inc = 1) of the cells in reading order.  The flag
// is relative to the canonical frame drawn in the factor table:
// single-peak types are canonical when the peak axis matches the
// canonical drawing (L1: vertical; T2, T4, T5: horizontal).
constexpr CornerType L0 = CornerType::L0, L1 = CornerType::L1, L3 = CornerType::L3,
                     L4 = CornerType::L4, L7 = CornerType::L7, T2 = CornerType::T2,
                     T4 = CornerType::T4, T5 = CornerType::T5, X0 = CornerType::X0,
                     X4 = CornerType::X4, X7 = CornerType::X7;

// bits: corner*4 + right*2 + below
inline constexpr std::array<TypeFlag, 8> kLTable = {{
    {L0, false}, {L1, false}, {L1, true}, {L3, false},
    {L4, false}, {L1, true}, {L1, false}, {L7, false},
}};

// bits: left*8 + corner*4 + right*2 + below
inline constexpr std::array<TypeFlag, 16> kTTable = {{
    {L7, false}, {L1, false}, {T2, false}, {L3, false},
    {T4, false}, {T5, false}, {L3, false}, {T2, false},
    {L1, true},  {L4, false}, {T5, false}, {T4, false},
    {L4, false}, {L1, true},  {L1, false}, {L7, false},
}};

// bits: up*16 + left*8 + corner*4 + right*2 + below
inline constexpr std::array<TypeFlag, 32> kXTable = {{
    {X0, false}, {T2, true},  {T2, false}, {L3, false},
    {X4, false}, {T4, false}, {T4, true},  {X7, false},
    {T2, false}, {X7, false}, {T5, false}, {T4, false},
    {T4, true},  {L3, false}, {T5, true},  {T2, true},
    {T2, true},  {T5, true},  {X7, false}, {T4, true},
    {T4, false}, {T5, false}, {L3, false}, {T2, false},
    {L3, false}, {T4, true},  {T4, false}, {X4, false},
    {X7, false}, {T2, false}, {T2, true},  {X0, false},
}};

}  // namespace detail

// Classify the corner of a connected one-corner matrix.
inline CornerProfile classify_corner(const GridMatrix& m) {
    if (!is_connected(m)) throw std::domain_error("classify_corner: matrix is not connected");
    auto corners = corner_cells(m);
    if (corners.empty()) throw std::domain_error("classify_corner: no corner cell");
    if (corners.size() > 1) throw std::domain_error("classify_corner: more than one corner cell");

    CellCoord corner = corners.front();
    CornerLocalStructure s = corner_local_structure(m, corner);
    int bit_corner = s.orientation == Cell::Inc ? 1 : 0;
    auto bit = [&](const std::optional<Cell>& a) { return (a && *a == Cell::Inc) ? 1 : 0; };

    bool has_l = s.arm_left.has_value(), has_r = s.arm_right.has_value();
    bool has_d = s.arm_down.has_value(), has_u = s.arm_up.has_value();
    int row_sides = (has_l ? 1 : 0) + (has_r ? 1 : 0);
    int col_sides = (has_d ? 1 : 0) + (has_u ? 1 : 0);

    detail::TypeFlag tf{};
    bool roles_swapped = false;
    if (row_sides == 1 && col_sides == 1) {
        // L shape: normalize arms to (right, below)
        Cell cr = has_r ? *s.arm_right : *s.arm_left;
        Cell cb = has_d ? *s.arm_down : *s.arm_up;
        Cell cc = s.orientation;
        bool flip = (has_l && has_d) || (has_r && has_u);  // single reflection
        if (flip) {
            auto fl = [](Cell x) { return x == Cell::Inc ? Cell::Dec : Cell::Inc; };
            cr = fl(cr);
            cb = fl(cb);
            cc = fl(cc);
        }
        int bits = (cc == Cell::Inc ? 4 : 0) | (cr == Cell::Inc ? 2 : 0) | (cb == Cell::Inc ? 1 : 0);
        tf = detail::kLTable[static_cast<std::size_t>(bits)];
    } else if (row_sides + col_sides == 3) {
        // T shape: normalize the stem to point down
        Cell cl, cr, cb, cc = s.orientation;
        bool flip = false;
        if (!has_u) {  // already canonical
            cl = *s.arm_left; cr = *s.arm_right; cb = *s.arm_down;
        } else if (!has_d) {  // stem up: vertical reflection
            cl = *s.arm_left; cr = *s.arm_right; cb = *s.arm_up;
            flip = true;
        } else if (!has_r) {  // stem left: transpose (left->below, up->right, down->left)
            cl = *s.arm_down; cr = *s.arm_up; cb = *s.arm_left;
            roles_swapped = true;
        } else {  // stem right: anti-transpose (right->below, up->left, down->right)
            cl = *s.arm_up; cr = *s.arm_down; cb = *s.arm_right;
            roles_swapped = true;
        }
        if (flip) {
            auto fl = [](Cell x) { return x == Cell::Inc ? Cell::Dec : Cell::Inc; };
            cl = fl(cl); cr = fl(cr); cb = fl(cb); cc = fl(cc);
        }
        int bits = (cl == Cell::Inc ? 8 : 0) | (cc == Cell::Inc ? 4 : 0) | (cr == Cell::Inc ? 2 : 0) |
                   (cb == Cell::Inc ? 1 : 0);
        tf = detail::kTTable[static_cast<std::size_t>(bits)];
    } else {
        int bits = (bit(s.arm_up) << 4) | (bit(s.arm_left) << 3) | (bit_corner << 2) |
                   (bit(s.arm_right) << 1) | bit(s.arm_down);
        tf = detail::kXTable[static_cast<std::size_t>(bits)];
    }

    CornerProfile prof;
    prof.corner = corner;
    prof.representative = tf.type;
    prof.rotated = tf.rotated != roles_swapped;
    for (int j = 1; j <= m.rows(); ++j)
        if (j != corner.row && nonblank(m.at(corner.col, j))) ++prof.r;
    for (int i = 1; i <= m.cols(); ++i)
        if (i != corner.col && nonblank(m.at(i, corner.row))) ++prof.c;
    prof.non_corner_peaks = peaks_diagonals_tees(m).non_corner_peaks;
    return prof;
}

}  // namespace gridclass
