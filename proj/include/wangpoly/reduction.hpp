#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wangpoly/blocks.hpp"
#include "wangpoly/geometry.hpp"
#include "wangpoly/wang.hpp"

namespace wangpoly {

class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lengths are counted in building blocks.
struct ReductionParams {
    int n = 0;
    int m = 0;
    int t = 0;
    std::int64_t seg = 0;  // one encoding segment: 2^(3n-1) slots of t+2 blocks
    std::int64_t gap = 0;  // padding segment, SEG - t - 1
    std::int64_t loc = 0;  // one locator row, 2 GAP + 1
    std::int64_t enc = 0;  // whole encoder, 2 SEG + GAP
    std::int64_t per = 0;  // lattice period, 2 (LOC + t)

    std::int64_t connector() const { return gap; }
    std::int64_t slots_per_segment() const { return seg / (t + 2); }

    friend bool operator==(const ReductionParams&, const ReductionParams&) = default;
};

/// Throws ReductionError when a length would not fit in 64 bits.
ReductionParams params(int n, int m);
ReductionParams params(const WangSet& ws);

/// Binary digits of color c, most significant first, 0 -> N, 1 -> F.
std::vector<Mid> color_bits(int c, int t);
int bits_color(std::span<const Mid> bits);

/// Slot numbers are 1-based; copy j of tile i (both 0-based) lives in slot
/// 2^(3i + j) of each encoding segment.
struct SlotEntry {
    std::int64_t slot = 0;
    int tile = 0;
    int copy = 0;

    friend bool operator==(const SlotEntry&, const SlotEntry&) = default;
};

std::int64_t slot_number(int tile, int copy);
std::optional<SlotEntry> slot_lookup(std::int64_t slot, int n);
/// All 3n used slots in increasing order.
std::vector<SlotEntry> slot_map(int n);

std::vector<BlockSpec> encoder_specs(const WangSet& ws);

/// Two rows of LOC blocks joined by a connector block under/over column GAP.
/// The blocks touching the connector have that side unlabeled.
struct LocatorLayout {
    std::vector<BlockSpec> bottom;
    std::vector<BlockSpec> top;
    std::int64_t connector = 0;
};

LocatorLayout locator_specs(const WangSet& ws);

/// Half-open range of block columns, relative to a locator origin.
struct ColumnRange {
    std::int64_t begin = 0;
    std::int64_t end = 0;
};

struct ReductionOutput {
    WangSet ws;
    ReductionParams params;
    CellSet filler;
    CellSet linker;
    CellSet locator;  // bottom row at y in [0, 14), connector above column GAP, top row at y = 28
    CellSet encoder;  // block j at x = 84 j
    std::vector<SlotEntry> slots;
    std::vector<BlockSpec> encoder_blocks;
    LocatorLayout locator_layout;
    ColumnRange left_exposed;   // [LOC, LOC + t)
    ColumnRange right_exposed;  // [2 LOC + t, 2 LOC + 2 t)
};

inline constexpr const char* kFillerName = "filler";
inline constexpr const char* kLinkerName = "linker";
inline constexpr const char* kLocatorName = "locator";
inline constexpr const char* kEncoderName = "encoder";

/// Encoders longer than this many blocks are refused (memory guard).
inline constexpr std::int64_t kMaxEncoderBlocks = std::int64_t{1} << 16;

ReductionOutput reduce(const WangSet& ws);
TileMap tile_map(const ReductionOutput& out);

}  // namespace wangpoly
