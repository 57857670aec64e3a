#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace loz {

enum class Orient : uint8_t { UP, DOWN };

// An addressed unit triangle. Within row `row` (rows grow downward), the
// up-pointing cell U(row,col) has its apex at doubled-x coordinate
// 2*col - row on lattice line `row`; the down-pointing cell D(row,col) has
// its top edge spanning doubled-x [2*col - row, 2*col - row + 2].
//
// Adjacency convention (fixed once, everything else derives from it):
//   U(r,k) ~ D(r,k-1)  shared left edge
//   U(r,k) ~ D(r,k)    shared right edge
//   U(r,k) ~ D(r+1,k)  shared bottom edge (the vertical-lozenge partner)
struct Cell {
    int row = 0;
    int col = 0;
    Orient orient = Orient::UP;

    bool up() const { return orient == Orient::UP; }
    // Doubled-x of the cell's vertical center line.
    int center_x() const { return up() ? 2 * col - row : 2 * col - row + 1; }

    auto operator<=>(const Cell&) const = default;
};

struct CellHash {
    size_t operator()(const Cell& c) const {
        uint64_t v = (uint64_t)(uint32_t)c.row << 34 | (uint64_t)(uint32_t)c.col << 2 |
                     (uint64_t)(c.orient == Orient::UP ? 0 : 1);
        return std::hash<uint64_t>()(v * 0x9e3779b97f4a7c15ull);
    }
};

inline std::array<Cell, 3> neighbors(const Cell& c) {
    if (c.up()) {
        return {Cell{c.row, c.col - 1, Orient::DOWN}, Cell{c.row, c.col, Orient::DOWN},
                Cell{c.row + 1, c.col, Orient::DOWN}};
    }
    return {Cell{c.row, c.col, Orient::UP}, Cell{c.row, c.col + 1, Orient::UP},
            Cell{c.row - 1, c.col, Orient::UP}};
}

// A lozenge is two edge-adjacent cells of opposite orientation; stored with
// the up-pointing cell first.
struct Lozenge {
    Cell a, b;  // a is UP, b is DOWN

    Lozenge() = default;
    Lozenge(Cell x, Cell y) {
        if (!x.up()) std::swap(x, y);
        if (!x.up() || y.up()) throw std::invalid_argument("lozenge needs one UP and one DOWN cell");
        bool adjacent = false;
        for (const Cell& n : neighbors(x)) adjacent |= (n == y);
        if (!adjacent) throw std::invalid_argument("lozenge cells are not edge-adjacent");
        a = x;
        b = y;
    }

    // Long axis vertical: U above its bottom-edge partner.
    bool vertical() const { return b.row == a.row + 1; }

    auto operator<=>(const Lozenge&) const = default;
};

// Lattice points (i, j): point j rows down, at doubled-x 2*i - j.
struct LatticePoint {
    int i = 0, j = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

inline std::array<LatticePoint, 3> corners(const Cell& c) {
    if (c.up())
        return {LatticePoint{c.col, c.row}, LatticePoint{c.col, c.row + 1},
                LatticePoint{c.col + 1, c.row + 1}};
    return {LatticePoint{c.col, c.row}, LatticePoint{c.col + 1, c.row},
            LatticePoint{c.col + 1, c.row + 1}};
}

// The 12 isometries of the triangular lattice fixing the origin: rotations by
// multiples of 60 degrees, optionally composed with the vertical-axis mirror.
struct Isometry {
    int rot = 0;      // 0..5, counterclockwise 60-degree steps
    bool mirror = false;  // mirror about a vertical line first

    LatticePoint apply(LatticePoint p) const {
        if (mirror) p = {p.j - p.i, p.j};
        for (int s = 0; s < rot; ++s) p = {p.j, p.j - p.i};
        return p;
    }
};

inline Cell cell_from_corners(std::array<LatticePoint, 3> pts) {
    // Sort by (j, i).
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a.j != b.j ? a.j < b.j : a.i < b.i;
    });
    if (pts[0].j + 1 == pts[1].j && pts[1].j == pts[2].j && pts[1].i + 1 == pts[2].i &&
        pts[0].i == pts[1].i)
        return Cell{pts[0].j, pts[0].i, Orient::UP};
    if (pts[0].j == pts[1].j && pts[1].j + 1 == pts[2].j && pts[0].i + 1 == pts[1].i &&
        pts[2].i == pts[1].i)
        return Cell{pts[0].j, pts[0].i, Orient::DOWN};
    throw std::logic_error("corner triple is not a unit cell");
}

inline Cell apply(const Isometry& iso, const Cell& c) {
    auto pts = corners(c);
    for (auto& p : pts) p = iso.apply(p);
    return cell_from_corners(pts);
}

inline Cell translate(const Cell& c, int di, int dj) {
    auto pts = corners(c);
    for (auto& p : pts) p = {p.i + di, p.j + dj};
    return cell_from_corners(pts);
}

}  // namespace loz
