#include "loz/polygon.hpp"

#include <algorithm>

namespace loz {

std::vector<Cell> cells_in_polygon(const Polygon& outer) {
    std::vector<Cell> out;
    if (outer.points().empty()) return out;
    int min_j = outer.points()[0].j, max_j = min_j;
    int min_x = outer.points()[0].x, max_x = min_x;
    for (const PolyPoint& p : outer.points()) {
        min_j = std::min(min_j, p.j);
        max_j = std::max(max_j, p.j);
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
    }
    for (int r = min_j; r < max_j; ++r) {
        // center lines of candidate cells lie within [min_x - 1, max_x + 1]
        for (int cx = min_x - 1; cx <= max_x + 1; ++cx) {
            bool up_parity = ((cx + r) % 2 + 2) % 2 == 0;
            Cell c;
            if (up_parity)
                c = Cell{r, (cx + r) / 2, Orient::UP};
            else
                c = Cell{r, (cx - 1 + r) / 2, Orient::DOWN};
            if (c.center_x() != cx) continue;  // integer division guard
            if (cell_inside(outer, c)) out.push_back(c);
        }
    }
    return out;
}

}  // namespace loz
