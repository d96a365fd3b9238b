#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wangpoly/geometry.hpp"
#include "wangpoly/reduction.hpp"
#include "wangpoly/wang.hpp"

namespace wangpoly {

/// Placement of the four tiles on a torus of R encoder rows and Q lattice
/// periods. Encoder row y occupies block-row 2y + 1; the locator of site
/// (y, p) spans block-rows 2y to 2y + 2 from block column origin(y, p).
struct Lattice {
    ReductionParams params;
    int rows = 0;
    int periods = 0;

    Lattice(const ReductionParams& p, int rows, int periods);

    std::int64_t width_blocks() const { return periods * params.per; }
    coord_t width() const { return width_blocks() * kBlockWidth; }
    coord_t height() const { return rows * 2 * kBlockHeight; }
    Region region() const { return Region::torus(width(), height()); }
    /// Block column of the locator of site (y, p), in [0, width_blocks()).
    std::int64_t origin(Site s) const;
    /// Block offset of the encoder for slot k, relative to its locator origin.
    std::int64_t encoder_start(std::int64_t k) const { return params.loc - 1 - (k - 1) * (params.t + 2); }
};

/// Chosen slot number per site, indexed [row][period].
using SlotGrid = std::vector<std::vector<std::int64_t>>;

class AssemblyError : public std::runtime_error {
public:
    explicit AssemblyError(const std::string& what) : std::runtime_error(what) {}
    AssemblyError(const std::string& what, Placement first, Placement second, Cell cell)
        : std::runtime_error(what), first(std::move(first)), second(std::move(second)), cell(cell) {}

    std::optional<Placement> first;
    std::optional<Placement> second;
    std::optional<Cell> cell;  // reduced to the torus window
};

/// Picks a copy of each site's tile so that no site shares its slot number
/// with either lower neighbor. Row 0 takes first copies; later rows take the
/// smallest admissible copy; wrap violations are repaired locally, then by
/// exhaustive search. Throws AssemblyError if no assignment exists.
SlotGrid choose_slots(const DiamondTiling& tiling, int n);
bool slots_admissible(const DiamondTiling& tiling, const SlotGrid& slots);

struct Census {
    std::size_t locators = 0;
    std::size_t encoders = 0;
    std::size_t linkers = 0;
    std::size_t fillers = 0;

    friend bool operator==(const Census&, const Census&) = default;
};

Census census(std::span<const Placement> placements);
std::string format_census(const Census& c);

struct AssemblyPlan {
    Lattice lattice;
    SlotGrid slots;
    std::vector<Placement> placements;  // locators, encoders, linkers, fillers
};

/// Throws AssemblyError on the first overlapping pair of placements.
AssemblyPlan assemble(const ReductionOutput& red, const DiamondTiling& tiling);

/// One filler placement per uncovered component; every component must be a
/// translate of `filler` (wrapping on a torus). Throws AssemblyError listing
/// the cells of the first component that is not.
std::vector<Placement> fill_holes(const Region& region, std::span<const Placement> placements, const TileMap& tiles,
                                  const std::string& filler_name);

struct DecodeResult {
    DiamondTiling tiling;
    SlotGrid slots;
};

/// Reads the simulated Wang tiling back from locator and encoder placements.
/// The first locator placement is taken as site (0, 0).
DecodeResult decode(const ReductionOutput& red, const Region& region, std::span<const Placement> placements);

}  // namespace wangpoly
