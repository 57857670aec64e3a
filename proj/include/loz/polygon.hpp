#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "loz/cells.hpp"

namespace loz {

// Polygons on the lattice, with vertices in (doubled-x, line) coordinates:
// lattice point (i, j) sits at doubled-x 2*i - j on line j. Lines grow
// downward. Edges must run along the lattice directions (E/W, NE/SW, NW/SE)
// or be vertical (constant doubled-x); vertical and off-lattice diagonal
// edges may slice through cells, which the overlap test below detects.
struct PolyPoint {
    int x = 0;  // doubled-x
    int j = 0;  // line index
};

class Polygon {
  public:
    Polygon() = default;
    explicit Polygon(std::vector<PolyPoint> pts) : pts_(std::move(pts)) {
        for (size_t k = 0; k < pts_.size(); ++k) {
            const PolyPoint& a = pts_[k];
            const PolyPoint& b = pts_[(k + 1) % pts_.size()];
            int dx = b.x - a.x, dj = b.j - a.j;
            bool ok = (dj == 0) || (dx == 0) || (dx == dj) || (dx == -dj);
            if (!ok) throw std::invalid_argument("polygon edge off the allowed directions");
        }
    }

    bool empty() const { return pts_.size() < 3 || area2() == 0; }
    const std::vector<PolyPoint>& points() const { return pts_; }

    long area2() const {  // twice the signed area in (x, j) coordinates
        long s = 0;
        for (size_t k = 0; k < pts_.size(); ++k) {
            const PolyPoint& a = pts_[k];
            const PolyPoint& b = pts_[(k + 1) % pts_.size()];
            s += (long)a.x * b.j - (long)b.x * a.j;
        }
        return s;
    }

    // Strict interior test for a query point given in tripled coordinates
    // (px = 3*doubled-x, pj = 3*line). Query points are assumed to avoid
    // polygon vertices; points exactly on an edge count as inside when
    // `closed` and outside otherwise.
    bool contains(long px, long pj, bool closed) const {
        bool on_edge = false;
        int crossings = 0;
        size_t n = pts_.size();
        for (size_t k = 0; k < n; ++k) {
            long ax = 3L * pts_[k].x, aj = 3L * pts_[k].j;
            long bx = 3L * pts_[(k + 1) % n].x, bj = 3L * pts_[(k + 1) % n].j;
            // on-segment check
            long cross = (bx - ax) * (pj - aj) - (bj - aj) * (px - ax);
            if (cross == 0 && std::min(ax, bx) <= px && px <= std::max(ax, bx) &&
                std::min(aj, bj) <= pj && pj <= std::max(aj, bj))
                on_edge = true;
            // ray casting toward +x
            if ((aj > pj) != (bj > pj)) {
                // x coordinate where the edge crosses the horizontal line pj:
                // ax + (pj - aj) * (bx - ax) / (bj - aj)  vs  px
                long num = (pj - aj) * (bx - ax);
                long den = bj - aj;
                long lhs = (px - ax) * den;
                if (den > 0 ? lhs < num : lhs > num) ++crossings;
            }
        }
        if (on_edge) return closed;
        return crossings % 2 == 1;
    }

    bool contains_point(PolyPoint p, bool closed) const { return contains(3L * p.x, 3L * p.j, closed); }

  private:
    std::vector<PolyPoint> pts_;
};

// Centroids of the west/east halves of a cell, in tripled coordinates.
// These points never lie on lattice lines, so containment against polygons
// whose edges follow lattice directions is never degenerate.
inline std::pair<std::pair<long, long>, std::pair<long, long>> half_centroids(const Cell& c) {
    long cx = c.center_x();
    long pj = c.up() ? 3L * c.row + 2 : 3L * c.row + 1;
    return {{3 * cx - 1, pj}, {3 * cx + 1, pj}};
}

// Cell fully inside the (closed) region bounded by `poly`.
inline bool cell_inside(const Polygon& poly, const Cell& c) {
    auto [l, r] = half_centroids(c);
    return poly.contains(l.first, l.second, false) && poly.contains(r.first, r.second, false);
}

// Cell whose interior meets the interior of `poly` (half-cell resolution,
// which is exact for the vertical and lattice-direction edges used here).
inline bool cell_overlaps(const Polygon& poly, const Cell& c) {
    auto [l, r] = half_centroids(c);
    return poly.contains(l.first, l.second, true) || poly.contains(r.first, r.second, true);
}

// Walks a closed boundary from `start` through direction steps.
class BoundaryTracer {
  public:
    explicit BoundaryTracer(PolyPoint start) : start_(start), cur_(start) { pts_.push_back(start); }

    BoundaryTracer& east(int n) { return step(2, 0, n); }
    BoundaryTracer& west(int n) { return step(-2, 0, n); }
    BoundaryTracer& se(int n) { return step(1, 1, n); }
    BoundaryTracer& sw(int n) { return step(-1, 1, n); }
    BoundaryTracer& ne(int n) { return step(1, -1, n); }
    BoundaryTracer& nw(int n) { return step(-1, -1, n); }

    // One unit move per entry; useful for zigzags.
    BoundaryTracer& follow(const std::vector<std::pair<int, int>>& moves) {
        for (auto [dx, dj] : moves) step(dx, dj, 1);
        return *this;
    }

    PolyPoint position() const { return cur_; }

    Polygon close() {
        if (cur_.x != start_.x || cur_.j != start_.j)
            throw std::logic_error("boundary trace does not close");
        pts_.pop_back();  // drop the duplicated start
        return Polygon(pts_);
    }

  private:
    BoundaryTracer& step(int dx, int dj, int n) {
        if (n < 0) throw std::invalid_argument("negative step count");
        if (n == 0) return *this;
        cur_.x += dx * n;
        cur_.j += dj * n;
        pts_.push_back(cur_);
        return *this;
    }
    PolyPoint start_, cur_;
    std::vector<PolyPoint> pts_;
};

// All cells of the lattice fully contained in `outer`.
std::vector<Cell> cells_in_polygon(const Polygon& outer);

}  // namespace loz
