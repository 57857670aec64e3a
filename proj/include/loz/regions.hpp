#pragma once

#include <map>
#include <optional>
#include <string>

#include "loz/region.hpp"

namespace loz {

enum class Family { HEXAGON, P, P_W, B, B_W, H1, H2, H3, H4, H5, H6, H7, H8, HS };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
// Parameter names in canonical order for each family.
const std::vector<std::string>& family_params(Family f);

struct RegionSpec {
    Family family = Family::HEXAGON;
    std::map<std::string, long> params;

    long at(const std::string& k) const;
};

// Validates `spec` (nonnegative parameters, family constraints, holes that
// fit); throws std::invalid_argument with a descriptive message otherwise.
void validate_spec(const RegionSpec& spec);
bool spec_is_valid(const RegionSpec& spec);

Region build(const RegionSpec& spec);

// Convenience constructors.
Region build_hexagon(long a, long b, long c);
Region build_P(long a, long b, long c, bool weighted);
Region build_B(long x, long a, long b, long c, bool weighted);
Region build_H(int i, long x, long b, long c, long m, long a, long d);
Region build_HS(long x, long y, long z, long m, long a, long b);

bool hs_fits(long x, long y, long z, long m, long a, long b, std::string* why = nullptr);

// Symmetry factorization of an HS region: weights the vertical lozenges on
// the symmetry axis by 1/2, splits the cells into the two component regions
// per the black/white edge-deletion rule, removes forced lozenges, and
// returns the parts with the exponent k such that
//   M(HS) = 2^k * M(left) * M(right).
struct HsSplit {
    Region left, right;
    long exponent = 0;
};
HsSplit hs_halves(long x, long y, long z, long m, long a, long b);

RegionSpec spec_from_json(const std::string& json_text);
std::string spec_to_json(const RegionSpec& spec);

namespace detail {

// Shared builder for the halved-hexagon families. The boundary is traced
// |n| east, `ne` rows down-right, `se` rows down-left, the south side west,
// then a west zigzag back up to the origin. `phase` 0 starts the descending
// zigzag with a down-left step (teeth centered on x=0), phase 1 with a
// down-right step (teeth centered on x=1).
struct TriHole {
    int center = 0;  // doubled-x of the hole's vertical symmetry line
    int side = 0;    // side length of the (full) triangle; <=0 means absent
    int line = 0;    // top line for down-pointing, base line for up-pointing
    bool down = true;
};

struct HalvedParams {
    long n = 0, ne = 0, se = 0;
    int phase = 0;
    std::optional<TriHole> m_hole, a_hole;
    long d_side = 0;                  // up-triangle attached at the m-hole's top east corner
    std::optional<int> weight_center;  // teeth verticals at this center get weight 1/2
    long w_lo = 0, w_hi = 0;          // row range for weighting (upper row of the pair)
};

Region build_halved(const HalvedParams& p);

}  // namespace detail

}  // namespace loz
