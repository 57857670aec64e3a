#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loz/cells.hpp"
#include "loz/rational.hpp"

namespace loz {

// Bipartite adjacency structure of the up/down cells of a region, with edge
// weights; tilings of the region are in bijection with its perfect matchings.
struct DualGraph {
    std::vector<Cell> up_vertices;
    std::vector<Cell> down_vertices;
    struct Edge {
        int u, d;
        Rat w;
    };
    std::vector<Edge> edges;
};

// A finite set of cells plus a sparse weight assignment on lozenge positions
// (absent means weight 1; the only explicit weight used here is 1/2).
class Region {
  public:
    Region() = default;
    explicit Region(std::vector<Cell> cells, std::map<Lozenge, Rat> weights = {});

    const std::vector<Cell>& cells() const { return cells_; }
    const std::map<Lozenge, Rat>& weights() const { return weights_; }

    bool contains(const Cell& c) const;
    bool empty() const { return cells_.empty(); }
    size_t size() const { return cells_.size(); }

    Rat weight(const Lozenge& l) const;
    void set_weight(const Lozenge& l, const Rat& w);

    // In-region neighbors of a cell.
    std::vector<Cell> region_neighbors(const Cell& c) const;

    Region without(const std::vector<Cell>& removed) const;
    Region restricted_to(const std::vector<Cell>& kept) const;

  private:
    std::vector<Cell> cells_;  // sorted, unique
    std::map<Lozenge, Rat> weights_;
};

bool is_balanced(const Region& r);

DualGraph dual_graph(const Region& r);

// Result of iterated forced-lozenge elimination. If `untileable`, some cell
// ended up with no partner and the region admits no tiling.
struct ForcedReduction {
    Region reduced;
    Rat weight = 1;  // product of removed lozenge weights
    bool untileable = false;
    std::vector<Lozenge> removed;
};

ForcedReduction remove_forced_lozenges(const Region& r);
// Variant that never removes a lozenge of non-unit weight, so the returned
// multiplier is always exactly 1.
ForcedReduction remove_forced_unit_lozenges(const Region& r);

// Splits `region` into (sub, region - sub). Throws std::invalid_argument
// naming the violated condition: (1) the boundary cells of `sub` along each
// straight boundary side must be uniformly oriented, (2) `sub` must be
// balanced.
std::pair<Region, Region> split_region(const Region& region, const Region& sub);

Region reflect_vertical(const Region& r);
Region transform(const Region& r, const Isometry& iso);
Region translate(const Region& r, int di, int dj);

// Translation-normalized canonical form; with `up_to_isometry`, minimized
// over all 12 lattice isometries. Weights travel with their lozenges.
Region normalize(const Region& r, bool up_to_isometry = false);
bool congruent(const Region& a, const Region& b, bool up_to_isometry = true);

std::string describe(const Region& r);

}  // namespace loz
