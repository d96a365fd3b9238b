#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wangpoly {

class WangError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Diamond-drawn Wang tile; edges are color indices.
struct WangTile {
    std::string name;
    int nw = 0;
    int ne = 0;
    int sw = 0;
    int se = 0;

    friend bool operator==(const WangTile&, const WangTile&) = default;
};

struct WangSet {
    std::vector<std::string> colors;  // index = first appearance
    std::vector<WangTile> tiles;

    int n() const { return static_cast<int>(tiles.size()); }
    int m() const { return static_cast<int>(colors.size()); }
    /// Bits per color, ceil(log2 m).
    int t() const;
    int tile_index(std::string_view name) const;  // -1 if absent
};

struct WangParseOptions {
    /// Append an unused color when only one color occurs.
    bool pad_colors = false;
};

/// Lines `tile <name> nw=<c> ne=<c> sw=<c> se=<c>`, `#` comments. An optional
/// `standard` header switches to `n= e= s= w=` fields. An optional
/// `colors <c>...` line fixes the index order of the listed colors.
WangSet parse_wang_set(std::string_view text, const WangParseOptions& options = {});
std::string format_wang_set(const WangSet& ws);

struct StandardTile {
    std::string name;
    int north = 0;
    int east = 0;
    int south = 0;
    int west = 0;
};

/// Rotates the square lattice by 45 degrees: (N, E, S, W) -> (nw=W, ne=N, sw=S, se=E).
WangSet from_standard(std::vector<std::string> colors, std::span<const StandardTile> tiles);

struct Site {
    int row = 0;
    int period = 0;
    friend bool operator==(const Site&, const Site&) = default;
};

/// Assignment of tiles on the staggered torus of `rows` x `periods` sites.
/// Site (y, p) meets (y-1, p) along its sw edge and (y-1, p+1) along its se
/// edge. Going up `rows` rows shifts the period index by rows/2, which is how
/// the staggered lattice closes on a rectangular torus.
class DiamondTiling {
public:
    DiamondTiling() = default;
    DiamondTiling(int rows, int periods, int fill = 0);

    int rows() const { return rows_; }
    int periods() const { return periods_; }
    int& at(int row, int period) { return grid_[offset(row, period)]; }
    int at(int row, int period) const { return grid_[offset(row, period)]; }
    int at(Site s) const { return at(s.row, s.period); }

    Site lower_left(Site s) const;   // across this site's sw edge
    Site lower_right(Site s) const;  // across this site's se edge
    Site upper_right(Site s) const;  // across this site's ne edge
    Site upper_left(Site s) const;   // across this site's nw edge

    friend bool operator==(const DiamondTiling&, const DiamondTiling&) = default;

private:
    std::size_t offset(int row, int period) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(periods_) + static_cast<std::size_t>(period);
    }
    int wrap_period(int p) const { return ((p % periods_) + periods_) % periods_; }

    int rows_ = 0;
    int periods_ = 0;
    std::vector<int> grid_;
};

/// Both diagonal adjacency families hold everywhere. Throws std::out_of_range
/// for tile indices outside the set.
bool check_tiling(const WangSet& ws, const DiamondTiling& tiling);

/// Lexicographically least tiling (row-major, tile index order), if any.
/// Rows must be even and positive.
std::optional<DiamondTiling> solve_torus(const WangSet& ws, int rows, int periods);
/// Exact number of valid assignments.
std::uint64_t count_torus(const WangSet& ws, int rows, int periods);

/// `tiling <R> <Q>` then R lines of Q tile names, row 0 first.
DiamondTiling parse_tiling(std::string_view text, const WangSet& ws);
std::string format_tiling(const DiamondTiling& tiling, const WangSet& ws);

}  // namespace wangpoly
