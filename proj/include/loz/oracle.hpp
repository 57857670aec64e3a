#pragma once

#include <vector>

#include "loz/region.hpp"

namespace loz {

// Exact weighted count of perfect matchings of a bipartite cell-adjacency
// graph. Returns 0 when no perfect matching exists (in particular when the
// vertex classes are unbalanced).
Rat count_matchings(const DualGraph& g);

// Algorithmically independent cross-check: memoized recursive matching of
// the first live vertex, sweeping in a different cell order. Intended for
// graphs up to roughly 120 vertices.
Rat count_matchings_recursive(const DualGraph& g);

// Weighted tiling count: forced-lozenge pre-reduction, then matchings of the
// dual graph, times the weight of the removed forced lozenges.
Rat count_tilings(const Region& r);

struct TilingWitness {
    std::vector<Lozenge> lozenges;
};

// Up to `limit` tilings in a deterministic canonical order (the full list
// whenever the total count does not exceed `limit`).
std::vector<TilingWitness> enumerate_tilings(const Region& r, long limit);

}  // namespace loz
