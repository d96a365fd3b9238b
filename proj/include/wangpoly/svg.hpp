#pragma once

#include <span>
#include <string>

#include "wangpoly/geometry.hpp"

namespace wangpoly {

inline constexpr int kPixelsPerCell = 4;

/// Fill color for a tile name, stable across runs (FNV-1a of the name).
std::string tile_color(std::string_view name);

/// One <path> per placement, y axis pointing up. Torus placements are drawn
/// reduced into the region window. Throws GeometryError for unknown tiles.
std::string render_placements(const TileMap& tiles, std::span<const Placement> placements, const Region& region);

/// All tiles of the map side by side, in name order, separated by a margin.
std::string render_tiles(const TileMap& tiles);

}  // namespace wangpoly
