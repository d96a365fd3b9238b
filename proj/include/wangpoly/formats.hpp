#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wangpoly/geometry.hpp"
#include "wangpoly/reduction.hpp"

namespace wangpoly {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

struct NamedTile {
    std::string name;
    CellSet cells;
};

/// `tile <name>` followed by `cell <x> <y>` lines; `#` comments.
NamedTile parse_polyomino(std::string_view text);
std::string format_polyomino(const std::string& name, const CellSet& cells);

/// Every `*.poly` file of a directory, keyed by the name inside the file.
TileMap load_tile_dir(const std::filesystem::path& dir);

struct PlacementFile {
    std::optional<Region> region;
    std::vector<Placement> placements;
};

/// Optional `region <literal>` line, then `place <name> <dx> <dy>` lines.
PlacementFile parse_placements(std::string_view text);
std::string format_placements(const PlacementFile& file);

/// One `key value` line per parameter.
std::string format_params(const ReductionParams& p);
ReductionParams parse_params(std::string_view text);

/// `slot <k> tile <name> copy <j>` per used slot.
std::string format_slots(const ReductionOutput& out);

}  // namespace wangpoly
