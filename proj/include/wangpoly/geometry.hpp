#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wangpoly {

using coord_t = std::int64_t;

/// Unit square [x, x+1) x [y, y+1) of the integer lattice.
struct Cell {
    coord_t x = 0;
    coord_t y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    // Row-major: y first, then x.
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

struct Vec {
    coord_t dx = 0;
    coord_t dy = 0;

    friend bool operator==(const Vec&, const Vec&) = default;
    friend Vec operator+(Vec a, Vec b) { return {a.dx + b.dx, a.dy + b.dy}; }
    friend Vec operator-(Vec a, Vec b) { return {a.dx - b.dx, a.dy - b.dy}; }
};

/// Lattice point (corner of unit squares).
struct Point {
    coord_t x = 0;
    coord_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Half-open box [x0, x1) x [y0, y1).
struct Box {
    coord_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    coord_t width() const { return x1 - x0; }
    coord_t height() const { return y1 - y0; }
    friend bool operator==(const Box&, const Box&) = default;
};

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite set of cells, kept sorted in row-major order and deduplicated.
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(std::vector<Cell> cells);
    CellSet(std::initializer_list<Cell> cells) : CellSet(std::vector<Cell>(cells)) {}

    /// Adopts an already sorted, duplicate-free vector.
    static CellSet from_sorted(std::vector<Cell> cells);
    static CellSet rectangle(coord_t x0, coord_t y0, coord_t width, coord_t height);

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(Cell c) const;
    std::span<const Cell> cells() const { return cells_; }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }
    std::optional<Box> bounds() const;

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    std::vector<Cell> cells_;
};

CellSet operator|(const CellSet& a, const CellSet& b);
CellSet operator&(const CellSet& a, const CellSet& b);
CellSet operator-(const CellSet& a, const CellSet& b);
bool intersects(const CellSet& a, const CellSet& b);

/// Throws GeometryError on coordinate overflow.
CellSet translate(const CellSet& cs, Vec v);
/// (x, y) -> (-x-1, -y-1), the half turn about the origin.
CellSet rotate180(const CellSet& cs);
/// Translate so the bounding box starts at (0, 0).
CellSet normalized(const CellSet& cs);
/// v with translate(from, v) == to, if any.
std::optional<Vec> translation_between(const CellSet& from, const CellSet& to);
bool equal_up_to_translation(const CellSet& a, const CellSet& b);

/// Edge-connected components, each sorted; ordered by their least cell.
std::vector<CellSet> components(const CellSet& cs);
bool is_connected(const CellSet& cs);

struct Placement {
    std::string tile;
    Vec offset;

    friend bool operator==(const Placement&, const Placement&) = default;
};

enum class RegionKind { box, torus };

struct Region {
    RegionKind kind = RegionKind::box;
    coord_t width = 1;
    coord_t height = 1;
    coord_t x0 = 0;
    coord_t y0 = 0;

    static Region box(coord_t w, coord_t h) { return {RegionKind::box, w, h, 0, 0}; }
    static Region torus(coord_t w, coord_t h) { return {RegionKind::torus, w, h, 0, 0}; }

    coord_t area() const { return width * height; }
    friend bool operator==(const Region&, const Region&) = default;
};

/// `box:WxH` or `torus:WxH`.
Region parse_region(std::string_view text);
std::string format_region(const Region& region);

using TileMap = std::map<std::string, CellSet, std::less<>>;

struct PartitionReport {
    bool ok = false;
    CellSet uncovered;
    CellSet overlaps;
    CellSet outside;  // box regions only: placed cells beyond the box
};

/// Exact-cover check of `region` by the placed tiles. Torus placements are
/// reduced to the canonical residue window before counting.
PartitionReport verify_partition(const Region& region, std::span<const Placement> placements,
                                 const TileMap& tiles);

/// Boundary loops of a cell set, interior on the left: outer loops run
/// counterclockwise, hole loops clockwise. Diagonal contacts are split.
std::vector<std::vector<Point>> boundary_loops(const CellSet& cs);

/// Counterclockwise boundary word over {U,D,L,R} starting at the least
/// boundary vertex (row-major). Requires a connected cell set without holes.
std::string boundary_word(const CellSet& cs);

}  // namespace wangpoly
