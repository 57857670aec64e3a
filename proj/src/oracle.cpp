#include "loz/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace loz {

namespace {

// Flattens a dual graph into cells sorted by a sweep order and an adjacency
// list over indices in that order.
struct SweepGraph {
    std::vector<Cell> cells;                       // sorted by sweep key
    std::vector<std::vector<std::pair<int, Rat>>> adj;  // index -> (index, weight)
    long up = 0, down = 0;

    template <typename Key>
    static SweepGraph build(const DualGraph& g, Key key) {
        SweepGraph s;
        for (const Cell& c : g.up_vertices) s.cells.push_back(c);
        for (const Cell& c : g.down_vertices) s.cells.push_back(c);
        s.up = (long)g.up_vertices.size();
        s.down = (long)g.down_vertices.size();
        std::sort(s.cells.begin(), s.cells.end(),
                  [&](const Cell& a, const Cell& b) { return key(a) < key(b); });
        std::unordered_map<Cell, int, CellHash> index;
        for (int i = 0; i < (int)s.cells.size(); ++i) index[s.cells[i]] = i;
        s.adj.resize(s.cells.size());
        for (const auto& e : g.edges) {
            int u = index.at(g.up_vertices[e.u]);
            int d = index.at(g.down_vertices[e.d]);
            s.adj[u].push_back({d, e.w});
            s.adj[d].push_back({u, e.w});
        }
        for (auto& v : s.adj)
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        return s;
    }
};

}  // namespace

Rat count_matchings(const DualGraph& g) {
    if (g.up_vertices.size() != g.down_vertices.size()) return 0;
    if (g.up_vertices.empty()) return 1;
    // Row-major sweep; the frontier state is the set of not-yet-reached cells
    // already claimed by an earlier partner, as a bitmask relative to the
    // sweep position.
    SweepGraph s = SweepGraph::build(g, [](const Cell& c) {
        return std::tuple<int, int, int>(c.row, c.center_x(), c.up() ? 0 : 1);
    });
    int n = (int)s.cells.size();
    for (int i = 0; i < n; ++i)
        for (const auto& [j, w] : s.adj[i])
            if (j > i && j - i >= 63) throw std::logic_error("sweep window exceeded");

    std::unordered_map<uint64_t, Rat> states;
    states[0] = 1;
    for (int i = 0; i < n; ++i) {
        std::unordered_map<uint64_t, Rat> next;
        next.reserve(states.size() * 2);
        for (const auto& [mask, cnt] : states) {
            if (mask & 1) {
                next[mask >> 1] += cnt;
                continue;
            }
            for (const auto& [j, w] : s.adj[i]) {
                if (j < i) continue;
                uint64_t bit = 1ull << (j - i);
                if (mask & bit) continue;
                next[(mask | bit) >> 1] += cnt * w;
            }
        }
        states.swap(next);
        if (states.empty()) return 0;
    }
    auto it = states.find(0);
    return it == states.end() ? Rat(0) : it->second;
}

namespace {

struct BitsetHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return (size_t)h;
    }
};

struct RecCounter {
    const SweepGraph& s;
    std::unordered_map<std::vector<uint64_t>, Rat, BitsetHash> memo;
    std::vector<uint64_t> live;

    explicit RecCounter(const SweepGraph& sg) : s(sg) {
        live.assign((s.cells.size() + 63) / 64, 0);
        for (size_t i = 0; i < s.cells.size(); ++i) live[i / 64] |= 1ull << (i % 64);
    }

    bool is_live(int i) const { return live[i / 64] >> (i % 64) & 1; }
    void drop(int i) { live[i / 64] &= ~(1ull << (i % 64)); }
    void add(int i) { live[i / 64] |= 1ull << (i % 64); }

    Rat count(int from) {
        int first = -1;
        for (int i = from; i < (int)s.cells.size(); ++i)
            if (is_live(i)) {
                first = i;
                break;
            }
        if (first < 0) return 1;
        auto it = memo.find(live);
        if (it != memo.end()) return it->second;
        Rat total = 0;
        drop(first);
        for (const auto& [j, w] : s.adj[first]) {
            if (!is_live(j)) continue;
            drop(j);
            total += w * count(first + 1);
            add(j);
        }
        add(first);
        memo.emplace(live, total);
        return total;
    }
};

}  // namespace

Rat count_matchings_recursive(const DualGraph& g) {
    if (g.up_vertices.size() != g.down_vertices.size()) return 0;
    if (g.up_vertices.empty()) return 1;
    // Column-major sweep, deliberately different from the primary algorithm.
    SweepGraph s = SweepGraph::build(g, [](const Cell& c) {
        return std::tuple<int, int, int>(c.center_x(), c.row, c.up() ? 0 : 1);
    });
    RecCounter rc(s);
    return rc.count(0);
}

Rat count_tilings(const Region& r) {
    ForcedReduction red = remove_forced_lozenges(r);
    if (red.untileable) return 0;
    if (red.reduced.empty()) return red.weight;
    return red.weight * count_matchings(dual_graph(red.reduced));
}

namespace {

void enumerate_rec(const Region& r, std::vector<Cell>& live, std::vector<Lozenge>& acc,
                   std::vector<TilingWitness>& out, long limit) {
    if ((long)out.size() >= limit) return;
    // first live cell in canonical order
    Cell first;
    bool found = false;
    for (const Cell& c : live)
        if (!found) {
            first = c;
            found = true;
        }
    if (!found) {
        out.push_back(TilingWitness{acc});
        return;
    }
    auto erase_cell = [&](const Cell& c) {
        live.erase(std::find(live.begin(), live.end(), c));
    };
    for (const Cell& n : neighbors(first)) {
        if ((long)out.size() >= limit) return;
        if (std::find(live.begin(), live.end(), n) == live.end()) continue;
        Lozenge l(first, n);
        erase_cell(first);
        erase_cell(n);
        acc.push_back(l);
        enumerate_rec(r, live, acc, out, limit);
        acc.pop_back();
        live.push_back(n);
        live.push_back(first);
        std::sort(live.begin(), live.end());
    }
}

}  // namespace

std::vector<TilingWitness> enumerate_tilings(const Region& r, long limit) {
    std::vector<TilingWitness> out;
    if (limit <= 0) return out;
    if (!is_balanced(r)) return out;
    std::vector<Cell> live = r.cells();
    std::vector<Lozenge> acc;
    enumerate_rec(r, live, acc, out, limit);
    return out;
}

}  // namespace loz
