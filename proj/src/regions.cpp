#include "loz/regions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "loz/polygon.hpp"

#include <nlohmann/json.hpp>

namespace loz {

namespace {

const std::vector<std::string> kABC = {"a", "b", "c"};
const std::vector<std::string> kXABC = {"x", "a", "b", "c"};
const std::vector<std::string> kH = {"x", "b", "c", "m", "a", "d"};
const std::vector<std::string> kHS = {"x", "y", "z", "m", "a", "b"};

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::HEXAGON: return "HEXAGON";
        case Family::P: return "P";
        case Family::P_W: return "P_W";
        case Family::B: return "B";
        case Family::B_W: return "B_W";
        case Family::H1: return "H1";
        case Family::H2: return "H2";
        case Family::H3: return "H3";
        case Family::H4: return "H4";
        case Family::H5: return "H5";
        case Family::H6: return "H6";
        case Family::H7: return "H7";
        case Family::H8: return "H8";
        case Family::HS: return "HS";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::map<std::string, Family> m = {
        {"HEXAGON", Family::HEXAGON}, {"P", Family::P},     {"P_W", Family::P_W},
        {"B", Family::B},             {"B_W", Family::B_W}, {"H1", Family::H1},
        {"H2", Family::H2},           {"H3", Family::H3},   {"H4", Family::H4},
        {"H5", Family::H5},           {"H6", Family::H6},   {"H7", Family::H7},
        {"H8", Family::H8},           {"HS", Family::HS}};
    auto it = m.find(name);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::string>& family_params(Family f) {
    switch (f) {
        case Family::HEXAGON:
        case Family::P:
        case Family::P_W: return kABC;
        case Family::B:
        case Family::B_W: return kXABC;
        case Family::HS: return kHS;
        default: return kH;
    }
}

long RegionSpec::at(const std::string& k) const {
    auto it = params.find(k);
    if (it == params.end()) fail(std::string("missing parameter '") + k + "'");
    return it->second;
}

namespace detail {

namespace {

// Descending west-zigzag moves; phase 0 starts down-left.
std::vector<std::pair<int, int>> zigzag_down(int phase, long rows) {
    std::vector<std::pair<int, int>> mv;
    for (long t = 0; t < rows; ++t) {
        bool sw = (t % 2 == 0) == (phase == 0);
        mv.push_back(sw ? std::make_pair(-1, 1) : std::make_pair(1, 1));
    }
    return mv;
}

Polygon tri_polygon(const TriHole& h) {
    int tip = h.down ? h.line + h.side : h.line - h.side;
    return Polygon({{h.center - h.side, h.line}, {h.center + h.side, h.line}, {h.center, tip}});
}

}  // namespace

Region build_halved(const HalvedParams& p) {
    long rows = p.ne + p.se;
    if (rows < 0 || p.n < 0) fail("halved hexagon with negative sides");
    int end_x = rows % 2 == 0 ? 0 : (p.phase == 0 ? -1 : 1);
    long s2 = 2 * p.n + p.ne - p.se - end_x;  // doubled length of the south side
    if (s2 < 0 || s2 % 2 != 0) fail("halved hexagon sides do not close");

    auto down_moves = zigzag_down(p.phase, rows);
    std::vector<std::pair<int, int>> up_moves;
    for (auto it = down_moves.rbegin(); it != down_moves.rend(); ++it)
        up_moves.push_back({-it->first, -it->second});

    BoundaryTracer tr({0, 0});
    tr.east(p.n).se(p.ne).sw(p.se).west(s2 / 2).follow(up_moves);
    Polygon outer = tr.close();

    std::vector<Cell> cells = cells_in_polygon(outer);

    std::vector<Polygon> holes;
    if (p.m_hole && p.m_hole->side > 0) holes.push_back(tri_polygon(*p.m_hole));
    if (p.a_hole && p.a_hole->side > 0) holes.push_back(tri_polygon(*p.a_hole));
    if (p.d_side > 0) {
        if (!p.m_hole) fail("d-hole requires an m-hole to attach to");
        int x0 = p.m_hole->center + p.m_hole->side;
        int j = p.m_hole->line;
        holes.push_back(
            Polygon({{x0, j}, {int(x0 + 2 * p.d_side), j}, {int(x0 + p.d_side), int(j - p.d_side)}}));
    }
    if (!holes.empty()) {
        std::vector<Cell> kept;
        kept.reserve(cells.size());
        for (const Cell& c : cells) {
            bool eaten = false;
            for (const Polygon& h : holes) eaten |= cell_overlaps(h, c);
            if (!eaten) kept.push_back(c);
        }
        cells.swap(kept);
    }

    Region r(std::move(cells));
    if (p.weight_center) {
        int wc = *p.weight_center;
        for (long row = p.w_lo; row < p.w_hi; ++row) {
            if (((wc + row) % 2 + 2) % 2 != 0) continue;
            long k = (wc + row) / 2;
            Cell u{(int)row, (int)k, Orient::UP};
            Cell dn{(int)(row + 1), (int)k, Orient::DOWN};
            if (r.contains(u) && r.contains(dn)) r.set_weight(Lozenge(u, dn), rat(1, 2));
        }
    }
    return r;
}

}  // namespace detail

Region build_hexagon(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) fail("hexagon sides must be nonnegative");
    BoundaryTracer tr({0, 0});
    tr.east(a).se(b).sw(c).west(a).nw(b).ne(c);
    return Region(cells_in_polygon(tr.close()));
}

namespace {

std::vector<std::pair<int, int>> p_cut_moves_down(long a, long b) {
    // Maximal staircase cut: alternate down-left/down-right from the top
    // while down-left steps remain, then run straight down-right.
    std::vector<std::pair<int, int>> mv;
    if (a == 0) {
        for (long t = 0; t < b; ++t) mv.push_back({1, 1});
        return mv;
    }
    mv.push_back({-1, 1});
    for (long t = 0; t < a - 1; ++t) {
        mv.push_back({1, 1});
        mv.push_back({-1, 1});
    }
    for (long t = 0; t < b - a + 1; ++t) mv.push_back({1, 1});
    return mv;
}

detail::HalvedParams h_params(int i, long x, long b, long c, long m, long a, long d) {
    detail::HalvedParams p;
    p.n = x + m;
    p.d_side = d;
    long rows;
    switch (i) {
        case 1:
            p.ne = 2 * a + b + c + 2 * d + 1;
            p.se = 2 * m + b + c + 1;
            p.phase = 0;
            rows = p.ne + p.se;
            p.m_hole = detail::TriHole{-1, int(2 * m + 1), int(2 * (c + d)), true};
            p.a_hole = detail::TriHole{-1, int(2 * a + 1), int(rows - 2 * b), false};
            break;
        case 2:
            p.ne = 2 * a + b + c + 2 * d;
            p.se = 2 * m + b + c;
            p.phase = 0;
            rows = p.ne + p.se;
            p.m_hole = detail::TriHole{-1, int(2 * m), int(2 * (c + d) - 1), true};
            p.a_hole = detail::TriHole{-1, int(2 * a), int(rows - 2 * b - 1), false};
            break;
        case 3:
            p.ne = 2 * a + b + c + 2 * d;
            p.se = 2 * m + b + c;
            p.phase = 0;
            rows = p.ne + p.se;
            p.m_hole = detail::TriHole{0, int(2 * m), int(2 * (c + d)), true};
            p.a_hole = detail::TriHole{0, int(2 * a), int(rows - 2 * b), false};
            p.weight_center = 0;
            p.w_lo = 0;
            p.w_hi = rows;
            break;
        case 4:
            p.ne = 2 * a + b + c + 2 * d - 1;
            p.se = 2 * m + b + c - 1;
            p.phase = 0;
            rows = p.ne + p.se;
            p.m_hole = detail::TriHole{0, int(2 * m - 1), int(2 * (c + d) - 1), true};
            p.a_hole = detail::TriHole{0, int(2 * a - 1), int(rows - 2 * b - 1), false};
            p.weight_center = 0;
            p.w_lo = 0;
            p.w_hi = rows;
            break;
        default: fail("h_params expects a family in 1..4");
    }
    return p;
}

// The mixed-boundary families are carved from the fully weighted ones by
// shaving the strip of cells along one horizontal side together with the
// zigzag teeth on the west portion beyond the relevant hole.
Region strip_cells(const detail::HalvedParams& parent, bool top, bool bottom, bool a_base) {
    Region r = detail::build_halved(parent);
    long rows = parent.ne + parent.se;
    int wc = parent.weight_center.value_or(parent.phase == 0 ? 0 : 1);
    std::vector<Cell> gone;
    for (const Cell& c : r.cells()) {
        bool kill = false;
        if (top) {
            if (c.row == 0) kill = true;
            if (parent.m_hole && c.center_x() == wc && c.row < parent.m_hole->line) kill = true;
        }
        if (bottom) {
            if (c.row == rows - 1) kill = true;
            if (parent.a_hole && c.center_x() == wc && c.row >= parent.a_hole->line) kill = true;
        }
        if (a_base && parent.a_hole && !c.up() && c.row == parent.a_hole->line) {
            long lo = 2 * c.col - c.row, hi = lo + 2;
            if (lo >= parent.a_hole->center - parent.a_hole->side &&
                hi <= parent.a_hole->center + parent.a_hole->side)
                kill = true;
        }
        if (kill) gone.push_back(c);
    }
    return normalize(r.without(gone));
}

}  // namespace

Region build_H(int i, long x, long b, long c, long m, long a, long d) {
    if (i < 1 || i > 8) fail("H family index must be 1..8");
    if (x < 0 || b < 0 || c < 0 || m < 0 || a < 0 || d < 0)
        fail("H family requires nonnegative parameters");
    switch (i) {
        case 1:
        case 2:
        case 3:
        case 4: return detail::build_halved(h_params(i, x, b, c, m, a, d));
        case 5: return strip_cells(h_params(4, x, b, c + 1, m + 1, a, d), true, false, false);
        case 6: return strip_cells(h_params(3, x, b, c, m, a, d), true, false, false);
        case 7: return strip_cells(h_params(3, x, b + 1, c, m, a, d), false, true, true);
        default: return strip_cells(h_params(4, x, b + 1, c, m, a, d), false, true, true);
    }
}

Region build_P(long a, long b, long c, bool weighted) {
    if (a < 0 || c < 0 || a > b) fail("P family requires 0 <= a <= b and c >= 0");
    auto down = p_cut_moves_down(a, b);
    std::vector<std::pair<int, int>> up;
    for (auto it = down.rbegin(); it != down.rend(); ++it) up.push_back({-it->first, -it->second});
    BoundaryTracer tr({0, 0});
    tr.east(c).se(b).sw(a).west(c).follow(up);
    Region r(cells_in_polygon(tr.close()));
    if (weighted) {
        for (long t = 0; t < a; ++t) {
            Cell u{(int)(2 * t), (int)t, Orient::UP};
            Cell dn{(int)(2 * t + 1), (int)t, Orient::DOWN};
            if (r.contains(u) && r.contains(dn)) r.set_weight(Lozenge(u, dn), rat(1, 2));
        }
    }
    return r;
}

Region build_B(long x, long a, long b, long c, bool weighted) {
    if (x < 0 || a < 0 || b < 0 || c < 0) fail("B family requires nonnegative parameters");
    detail::HalvedParams p;
    p.n = x + a;
    p.ne = b + c;
    if (!weighted) {
        p.phase = 0;
        p.se = 2 * a + c + 1;
        p.m_hole = detail::TriHole{-1, int(2 * a + 1), int(2 * c), true};
        p.a_hole = detail::TriHole{-1, (int)b, int(p.ne + p.se), false};
    } else {
        p.phase = 0;
        p.se = 2 * a + c;
        p.m_hole = detail::TriHole{-1, int(2 * a + 1), int(2 * c), true};
        p.a_hole = detail::TriHole{-1, int(b + 1), int(p.ne + p.se), false};
        p.weight_center = 0;
        p.w_lo = 0;
        p.w_hi = p.ne + p.se;
    }
    return detail::build_halved(p);
}

namespace {

struct HsGeometry {
    long rows, axis;  // total rows, doubled-x of the symmetry axis
    long j0;          // top line of the core
    std::vector<Polygon> holes;
};

HsGeometry hs_geometry(long x, long y, long z, long m, long a, long b) {
    HsGeometry g;
    g.rows = 2 * y + a + 2 * b + m;
    g.axis = x + m;
    g.j0 = g.rows - z - a - m;
    int X = (int)g.axis, j0 = (int)g.j0;
    if (m > 0)
        g.holes.push_back(Polygon({{int(X - m), j0}, {int(X + m), j0}, {X, int(j0 + m)}}));
    if (a > 0)
        g.holes.push_back(Polygon(
            {{int(X - a), int(j0 + m + a)}, {int(X + a), int(j0 + m + a)}, {X, int(j0 + m)}}));
    if (b > 0) {
        g.holes.push_back(
            Polygon({{int(X - m - 2 * b), j0}, {int(X - m), j0}, {int(X - m - b), int(j0 - b)}}));
        g.holes.push_back(
            Polygon({{int(X + m), j0}, {int(X + m + 2 * b), j0}, {int(X + m + b), int(j0 - b)}}));
    }
    return g;
}

}  // namespace

bool hs_fits(long x, long y, long z, long m, long a, long b, std::string* why) {
    auto reject = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (x < 0 || y < 0 || z < 0 || m < 0 || a < 0 || b < 0)
        return reject("parameters must be nonnegative");
    if ((x - z) % 2 != 0) return reject("x and z must have the same parity");
    HsGeometry g = hs_geometry(x, y, z, m, a, b);
    long ne = y + a + 2 * b;
    auto west_x = [&](long j) { return j <= ne ? -j : j - 2 * ne; };
    auto east_x = [&](long j) { return j <= ne ? 2 * g.axis + j : 2 * g.axis + 2 * ne - j; };
    if (m == 0 && a == 0 && b == 0) {
        if (z > 2 * y) return reject("anchor offset exceeds the hexagon height");
        return true;
    }
    for (const Polygon& h : g.holes) {
        for (const PolyPoint& v : h.points()) {
            bool base_touch = (z == 0 && v.j == g.rows);
            if (v.j < 1) return reject("shamrock touches or crosses the northern side");
            if (v.j > g.rows || (v.j == g.rows && !base_touch))
                return reject("shamrock extends past the southern side");
            long lo = west_x(v.j), hi = east_x(v.j);
            bool strict = !base_touch;
            if (strict ? (v.x <= lo || v.x >= hi) : (v.x < lo || v.x > hi))
                return reject("shamrock reaches the slanted boundary");
        }
    }
    return true;
}

Region build_HS(long x, long y, long z, long m, long a, long b) {
    std::string why;
    if (!hs_fits(x, y, z, m, a, b, &why)) fail("HS: " + why);
    HsGeometry g = hs_geometry(x, y, z, m, a, b);
    BoundaryTracer tr({0, 0});
    tr.east(x + m).se(y + a + 2 * b).sw(y + m).west(x + a + 2 * b).nw(y + m).ne(y + a + 2 * b);
    Polygon outer = tr.close();
    std::vector<Cell> cells;
    for (const Cell& c : cells_in_polygon(outer)) {
        bool eaten = false;
        for (const Polygon& h : g.holes) eaten |= cell_overlaps(h, c);
        if (!eaten) cells.push_back(c);
    }
    return Region(std::move(cells));
}

HsSplit hs_halves(long x, long y, long z, long m, long a, long b) {
    Region whole = build_HS(x, y, z, m, a, b);
    long axis_x = x + m;

    std::vector<Cell> axis;
    for (const Cell& c : whole.cells())
        if (c.center_x() == axis_x) axis.push_back(c);
    std::sort(axis.begin(), axis.end(),
              [](const Cell& p, const Cell& q) { return p.row < q.row; });
    if (axis.size() % 2 != 0) throw std::logic_error("odd number of cells on the symmetry axis");

    // Halve the weight of every vertical lozenge joining consecutive axis cells.
    Region weighted = whole;
    for (size_t i = 0; i + 1 < axis.size(); ++i) {
        if (axis[i + 1].row == axis[i].row + 1 && axis[i].up() && !axis[i + 1].up())
            weighted.set_weight(Lozenge(axis[i], axis[i + 1]), rat(1, 2));
    }

    // Attachment side of each axis cell: with the topmost axis cell black,
    // odd-indexed (a_i, black) and even-indexed (b_i, white) cells keep only
    // their east edges; the opposite colorings keep only the west edges.
    std::set<Cell> left_axis;
    for (size_t i = 0; i < axis.size(); ++i) {
        int color = axis[i].orient == axis[0].orient ? 0 : 1;
        int label = (int)(i % 2);
        if (color != label) left_axis.insert(axis[i]);
    }

    std::vector<Cell> left_cells, right_cells;
    for (const Cell& c : weighted.cells()) {
        if (c.center_x() < axis_x || left_axis.count(c))
            left_cells.push_back(c);
        else
            right_cells.push_back(c);
    }
    Region left = weighted.restricted_to(left_cells);
    Region right = weighted.restricted_to(right_cells);

    HsSplit out;
    out.exponent = (long)axis.size() / 2;
    ForcedReduction fl = remove_forced_lozenges(left);
    ForcedReduction fr = remove_forced_lozenges(right);
    if (fl.untileable || fr.untileable) {
        // Keep the unreduced halves; the identity still holds with count 0.
        out.left = left;
        out.right = right;
        return out;
    }
    for (const Lozenge& l : fl.removed)
        if (left.weight(l) != 1) --out.exponent;
    for (const Lozenge& l : fr.removed)
        if (right.weight(l) != 1) --out.exponent;
    out.left = normalize(fl.reduced);
    out.right = normalize(fr.reduced);
    return out;
}

void validate_spec(const RegionSpec& spec) {
    for (const std::string& k : family_params(spec.family)) {
        long v = spec.at(k);
        if (v < 0) fail("parameter '" + k + "' must be nonnegative");
    }
    switch (spec.family) {
        case Family::P:
        case Family::P_W:
            if (spec.at("a") > spec.at("b")) fail("P family requires a <= b");
            break;
        case Family::HS: {
            std::string why;
            if (!hs_fits(spec.at("x"), spec.at("y"), spec.at("z"), spec.at("m"), spec.at("a"),
                         spec.at("b"), &why))
                fail("HS: " + why);
            break;
        }
        default: break;
    }
}

bool spec_is_valid(const RegionSpec& spec) {
    try {
        validate_spec(spec);
        build(spec);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

Region build(const RegionSpec& spec) {
    validate_spec(spec);
    switch (spec.family) {
        case Family::HEXAGON: return build_hexagon(spec.at("a"), spec.at("b"), spec.at("c"));
        case Family::P: return build_P(spec.at("a"), spec.at("b"), spec.at("c"), false);
        case Family::P_W: return build_P(spec.at("a"), spec.at("b"), spec.at("c"), true);
        case Family::B:
            return build_B(spec.at("x"), spec.at("a"), spec.at("b"), spec.at("c"), false);
        case Family::B_W:
            return build_B(spec.at("x"), spec.at("a"), spec.at("b"), spec.at("c"), true);
        case Family::HS:
            return build_HS(spec.at("x"), spec.at("y"), spec.at("z"), spec.at("m"), spec.at("a"),
                            spec.at("b"));
        default: {
            int i = 1 + (int)spec.family - (int)Family::H1;
            return build_H(i, spec.at("x"), spec.at("b"), spec.at("c"), spec.at("m"), spec.at("a"),
                           spec.at("d"));
        }
    }
}

RegionSpec spec_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    RegionSpec spec;
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) fail("unknown family '" + j.at("family").get<std::string>() + "'");
    spec.family = *fam;
    for (const auto& [k, v] : j.at("params").items()) spec.params[k] = v.get<long>();
    return spec;
}

std::string spec_to_json(const RegionSpec& spec) {
    nlohmann::json j;
    j["family"] = family_name(spec.family);
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : spec.params) j["params"][k] = v;
    return j.dump();
}

}  // namespace loz
