#include "loz/region.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace loz {

Region::Region(std::vector<Cell> cells, std::map<Lozenge, Rat> weights)
    : cells_(std::move(cells)), weights_(std::move(weights)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (const auto& [l, w] : weights_) {
        if (!contains(l.a) || !contains(l.b))
            throw std::invalid_argument("weighted lozenge outside region");
        if (w <= 0) throw std::invalid_argument("lozenge weights must be positive");
    }
}

bool Region::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

Rat Region::weight(const Lozenge& l) const {
    auto it = weights_.find(l);
    return it == weights_.end() ? Rat(1) : it->second;
}

void Region::set_weight(const Lozenge& l, const Rat& w) {
    if (!contains(l.a) || !contains(l.b))
        throw std::invalid_argument("weighted lozenge outside region");
    if (w == 1)
        weights_.erase(l);
    else
        weights_[l] = w;
}

std::vector<Cell> Region::region_neighbors(const Cell& c) const {
    std::vector<Cell> out;
    for (const Cell& n : neighbors(c))
        if (contains(n)) out.push_back(n);
    return out;
}

Region Region::without(const std::vector<Cell>& removed) const {
    std::set<Cell> gone(removed.begin(), removed.end());
    std::vector<Cell> kept;
    kept.reserve(cells_.size());
    for (const Cell& c : cells_)
        if (!gone.count(c)) kept.push_back(c);
    std::map<Lozenge, Rat> w;
    for (const auto& [l, wt] : weights_)
        if (!gone.count(l.a) && !gone.count(l.b)) w.emplace(l, wt);
    return Region(std::move(kept), std::move(w));
}

Region Region::restricted_to(const std::vector<Cell>& kept_list) const {
    std::set<Cell> keep(kept_list.begin(), kept_list.end());
    std::vector<Cell> kept;
    for (const Cell& c : cells_)
        if (keep.count(c)) kept.push_back(c);
    std::map<Lozenge, Rat> w;
    for (const auto& [l, wt] : weights_)
        if (keep.count(l.a) && keep.count(l.b)) w.emplace(l, wt);
    return Region(std::move(kept), std::move(w));
}

bool is_balanced(const Region& r) {
    long bal = 0;
    for (const Cell& c : r.cells()) bal += c.up() ? 1 : -1;
    return bal == 0;
}

DualGraph dual_graph(const Region& r) {
    DualGraph g;
    std::unordered_map<Cell, int, CellHash> index;
    for (const Cell& c : r.cells()) {
        if (c.up()) {
            index[c] = (int)g.up_vertices.size();
            g.up_vertices.push_back(c);
        } else {
            index[c] = (int)g.down_vertices.size();
            g.down_vertices.push_back(c);
        }
    }
    for (const Cell& c : r.cells()) {
        if (!c.up()) continue;
        for (const Cell& n : r.region_neighbors(c))
            g.edges.push_back({index[c], index[n], r.weight(Lozenge(c, n))});
    }
    return g;
}

namespace {

ForcedReduction forced_impl(const Region& r, bool unit_only) {
    ForcedReduction out;
    std::set<Cell> live(r.cells().begin(), r.cells().end());
    auto degree = [&](const Cell& c) {
        int d = 0;
        for (const Cell& n : neighbors(c))
            if (live.count(n)) ++d;
        return d;
    };
    std::deque<Cell> work(r.cells().begin(), r.cells().end());
    auto enqueue_around = [&](const Cell& c) {
        for (const Cell& n : neighbors(c))
            if (live.count(n)) work.push_back(n);
    };
    while (!work.empty()) {
        Cell c = work.front();
        work.pop_front();
        if (!live.count(c)) continue;
        std::vector<Cell> ns;
        for (const Cell& n : neighbors(c))
            if (live.count(n)) ns.push_back(n);
        if (ns.empty()) {
            out.untileable = true;
            break;
        }
        if (ns.size() != 1) continue;
        Lozenge l(c, ns[0]);
        Rat w = r.weight(l);
        if (unit_only && w != 1) continue;
        live.erase(c);
        live.erase(ns[0]);
        out.weight *= w;
        out.removed.push_back(l);
        enqueue_around(c);
        enqueue_around(ns[0]);
        (void)degree;
    }
    out.reduced = r.restricted_to(std::vector<Cell>(live.begin(), live.end()));
    return out;
}

}  // namespace

ForcedReduction remove_forced_lozenges(const Region& r) { return forced_impl(r, false); }
ForcedReduction remove_forced_unit_lozenges(const Region& r) { return forced_impl(r, true); }

namespace {

// Oriented boundary edge of a cell, canonically keyed by its two endpoints.
struct BEdge {
    LatticePoint a, b;  // a < b
    bool operator<(const BEdge& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
};

// Edge direction class: 0 horizontal, 1 along SE (i const), 2 along NE-ish.
int edge_dir(const BEdge& e) {
    if (e.a.j == e.b.j) return 0;
    if (e.a.i == e.b.i) return 1;
    return 2;
}

std::array<BEdge, 3> cell_edges(const Cell& c) {
    auto p = corners(c);
    auto mk = [](LatticePoint x, LatticePoint y) {
        if (y < x) std::swap(x, y);
        return BEdge{x, y};
    };
    return {mk(p[0], p[1]), mk(p[0], p[2]), mk(p[1], p[2])};
}

}  // namespace

std::pair<Region, Region> split_region(const Region& region, const Region& sub) {
    for (const Cell& c : sub.cells())
        if (!region.contains(c)) throw std::invalid_argument("split: sub is not a subregion");
    if (!is_balanced(sub))
        throw std::invalid_argument("split: sub is not balanced (condition 2)");

    // Boundary edges of sub with the orientation of the owning sub-cell.
    std::map<BEdge, Orient> owner;
    for (const Cell& c : sub.cells()) {
        for (const BEdge& e : cell_edges(c)) {
            auto it = owner.find(e);
            if (it == owner.end())
                owner.emplace(e, c.orient);
            else
                owner.erase(it);  // interior edge, shared by two sub cells
        }
    }
    // Group boundary edges into maximal straight sides: same direction class,
    // same supporting line, contiguous positions.
    struct Side {
        int dir;
        long line;
        long pos;
        Orient o;
    };
    std::vector<Side> sides;
    for (const auto& [e, o] : owner) {
        int d = edge_dir(e);
        long line, pos;
        if (d == 0) {
            line = e.a.j;
            pos = e.a.i;
        } else if (d == 1) {
            line = e.a.i;  // edges along the SW lattice direction keep i fixed
            pos = e.a.j;
        } else {
            line = e.a.i - e.a.j;  // edges along the SE lattice direction keep i-j fixed
            pos = e.a.j;
        }
        sides.push_back({d, line, pos, o});
    }
    std::sort(sides.begin(), sides.end(), [](const Side& a, const Side& b) {
        if (a.dir != b.dir) return a.dir < b.dir;
        if (a.line != b.line) return a.line < b.line;
        return a.pos < b.pos;
    });
    for (size_t i = 1; i < sides.size(); ++i) {
        const Side& p = sides[i - 1];
        const Side& q = sides[i];
        if (p.dir == q.dir && p.line == q.line && q.pos == p.pos + 1 && p.o != q.o)
            throw std::invalid_argument(
                "split: boundary cells of sub are not uniformly oriented along a side (condition 1)");
    }

    Region rest = region.without(sub.cells());
    Region s = region.restricted_to(sub.cells());
    return {s, rest};
}

Region transform(const Region& r, const Isometry& iso) {
    std::vector<Cell> cells;
    cells.reserve(r.size());
    for (const Cell& c : r.cells()) cells.push_back(apply(iso, c));
    std::map<Lozenge, Rat> w;
    for (const auto& [l, wt] : r.weights()) w.emplace(Lozenge(apply(iso, l.a), apply(iso, l.b)), wt);
    return Region(std::move(cells), std::move(w));
}

Region reflect_vertical(const Region& r) { return transform(r, Isometry{0, true}); }

Region translate(const Region& r, int di, int dj) {
    std::vector<Cell> cells;
    cells.reserve(r.size());
    for (const Cell& c : r.cells()) cells.push_back(translate(c, di, dj));
    std::map<Lozenge, Rat> w;
    for (const auto& [l, wt] : r.weights())
        w.emplace(Lozenge(translate(l.a, di, dj), translate(l.b, di, dj)), wt);
    return Region(std::move(cells), std::move(w));
}

namespace {

Region normalize_translation(const Region& r) {
    if (r.empty()) return r;
    int min_j = r.cells()[0].row;
    for (const Cell& c : r.cells()) min_j = std::min(min_j, c.row);
    int min_i = corners(r.cells()[0])[0].i;
    for (const Cell& c : r.cells())
        for (const auto& p : corners(c)) min_i = std::min(min_i, p.i);
    return translate(r, -min_i, -min_j);
}

bool region_less(const Region& a, const Region& b) {
    if (a.cells() != b.cells()) return a.cells() < b.cells();
    return a.weights() < b.weights();
}

}  // namespace

Region normalize(const Region& r, bool up_to_isometry) {
    Region best = normalize_translation(r);
    if (!up_to_isometry) return best;
    for (int rot = 0; rot < 6; ++rot) {
        for (int m = 0; m < 2; ++m) {
            Region cand = normalize_translation(transform(r, Isometry{rot, m == 1}));
            if (region_less(cand, best)) best = cand;
        }
    }
    return best;
}

bool congruent(const Region& a, const Region& b, bool up_to_isometry) {
    Region na = normalize(a, up_to_isometry);
    Region nb = normalize(b, up_to_isometry);
    return na.cells() == nb.cells() && na.weights() == nb.weights();
}

std::string describe(const Region& r) {
    std::ostringstream os;
    long up = 0;
    for (const Cell& c : r.cells()) up += c.up();
    os << r.size() << " cells (" << up << " up, " << (long)r.size() - up << " down), "
       << r.weights().size() << " weighted lozenges";
    return os.str();
}

}  // namespace loz
