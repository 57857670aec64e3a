#pragma once

#include <optional>
#include <string>

#include "loz/oracle.hpp"
#include "loz/region.hpp"

namespace loz {

// SVG 1.1 drawing of a region: cell outlines, shaded cores on half-weight
// lozenges, and optionally a tiling overlay.
std::string render_svg(const Region& r, const std::optional<TilingWitness>& tiling);

}  // namespace loz
