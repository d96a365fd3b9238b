#include "wangpoly/reduction.hpp"

#include <bit>
#include <limits>

#include "wangpoly/raster.hpp"

namespace wangpoly {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ReductionError("size overflow in reduction parameters");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ReductionError("size overflow in reduction parameters");
    return r;
}

SideLabel letters(LetterSet bumps, std::optional<Mid> mid, LetterSet dents) { return {bumps, mid, dents}; }

BlockSpec both(const SideLabel& l) { return {l, l}; }

const SideLabel kBlank{};
const SideLabel kMarkerLeft = letters({Letter::M}, std::nullopt, {Letter::L});
const SideLabel kMarkerRight = letters({Letter::M}, std::nullopt, {Letter::R});
const SideLabel kSelectorRight = letters({Letter::R}, std::nullopt, {Letter::M});
const SideLabel kSelectorLeft = letters({Letter::L}, std::nullopt, {Letter::M});
const SideLabel kOuter = letters({}, std::nullopt, {Letter::C, Letter::M});
const SideLabel kGapFacing = letters({}, std::nullopt, {Letter::A, Letter::C, Letter::M});
const SideLabel kLinker = letters({Letter::A}, std::nullopt, {Letter::C});

SideLabel encoding(Mid bit) { return letters({Letter::C}, bit, {Letter::A}); }

void append_segment(std::vector<BlockSpec>& out, const WangSet& ws, const ReductionParams& p, bool left) {
    for (std::int64_t k = 1; k <= p.slots_per_segment(); ++k) {
        out.push_back(both(kMarkerLeft));
        auto entry = slot_lookup(k, p.n);
        if (entry) {
            const WangTile& tile = ws.tiles[static_cast<std::size_t>(entry->tile)];
            auto north = color_bits(left ? tile.nw : tile.ne, p.t);
            auto south = color_bits(left ? tile.sw : tile.se, p.t);
            for (int q = 0; q < p.t; ++q)
                out.push_back({encoding(north[static_cast<std::size_t>(q)]), encoding(south[static_cast<std::size_t>(q)])});
        } else {
            for (int q = 0; q < p.t; ++q) out.push_back(both(kBlank));
        }
        out.push_back(both(kMarkerRight));
    }
}

}  // namespace

ReductionParams params(int n, int m) {
    if (n < 1) throw ReductionError("need at least one Wang tile");
    if (m < 2) throw ReductionError("need at least two colors");
    ReductionParams p;
    p.n = n;
    p.m = m;
    while ((std::int64_t{1} << p.t) < m) ++p.t;
    if (3 * static_cast<std::int64_t>(n) - 1 >= 62) throw ReductionError("size overflow in reduction parameters");
    const std::int64_t slots = std::int64_t{1} << (3 * n - 1);
    p.seg = checked_mul(slots, p.t + 2);
    p.gap = p.seg - p.t - 1;
    p.loc = checked_add(checked_mul(2, p.gap), 1);
    p.enc = checked_add(checked_mul(2, p.seg), p.gap);
    p.per = checked_mul(2, checked_add(p.loc, p.t));
    checked_mul(p.per, kBlockWidth);  // cell coordinates must fit as well
    return p;
}

ReductionParams params(const WangSet& ws) { return params(ws.n(), ws.m()); }

std::vector<Mid> color_bits(int c, int t) {
    if (t < 0 || t > 30 || c < 0 || c >= (1 << t)) throw std::out_of_range("color index out of range for t bits");
    std::vector<Mid> out;
    for (int b = t - 1; b >= 0; --b) out.push_back(((c >> b) & 1) ? Mid::F : Mid::N);
    return out;
}

int bits_color(std::span<const Mid> bits) {
    int c = 0;
    for (Mid b : bits) c = 2 * c + (b == Mid::F ? 1 : 0);
    return c;
}

std::int64_t slot_number(int tile, int copy) { return std::int64_t{1} << (3 * tile + copy); }

std::optional<SlotEntry> slot_lookup(std::int64_t slot, int n) {
    if (slot <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(slot))) return std::nullopt;
    const int e = std::countr_zero(static_cast<std::uint64_t>(slot));
    if (e >= 3 * n) return std::nullopt;
    return SlotEntry{slot, e / 3, e % 3};
}

std::vector<SlotEntry> slot_map(int n) {
    std::vector<SlotEntry> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j) out.push_back({slot_number(i, j), i, j});
    return out;
}

std::vector<BlockSpec> encoder_specs(const WangSet& ws) {
    const ReductionParams p = params(ws);
    std::vector<BlockSpec> out;
    out.reserve(static_cast<std::size_t>(p.enc));
    append_segment(out, ws, p, true);
    for (std::int64_t g = 0; g < p.gap; ++g) out.push_back(both(kBlank));
    append_segment(out, ws, p, false);
    return out;
}

LocatorLayout locator_specs(const WangSet& ws) {
    const ReductionParams p = params(ws);
    LocatorLayout layout;
    layout.connector = p.connector();
    for (std::int64_t j = 0; j < p.loc; ++j) {
        if (j == 0) {
            layout.bottom.push_back(both(kSelectorRight));
        } else if (j == p.loc - 1) {
            layout.bottom.push_back(both(kSelectorLeft));
        } else {
            layout.bottom.push_back({kGapFacing, kOuter});
        }
        BlockSpec top = layout.bottom.back();
        std::swap(top.north, top.south);
        layout.top.push_back(top);
    }
    layout.bottom[static_cast<std::size_t>(p.connector())].north.reset();
    layout.top[static_cast<std::size_t>(p.connector())].south.reset();
    return layout;
}

ReductionOutput reduce(const WangSet& ws) {
    ReductionOutput out;
    out.ws = ws;
    out.params = params(ws);
    const ReductionParams& p = out.params;
    if (p.enc > kMaxEncoderBlocks)
        throw ReductionError("encoder of " + std::to_string(p.enc) + " blocks exceeds the supported size");

    out.filler = plus_shape(0, 0);
    out.linker = build_block(both(kLinker));
    out.slots = slot_map(p.n);
    out.encoder_blocks = encoder_specs(ws);
    out.encoder = build_row(out.encoder_blocks);
    out.locator_layout = locator_specs(ws);

    Raster r(Box{0, -kBlockHeight, p.loc * kBlockWidth, 4 * kBlockHeight});
    r.paint(build_row(out.locator_layout.bottom));
    r.paint(build_row(out.locator_layout.top), {0, 2 * kBlockHeight});
    r.fill(Box{p.connector() * kBlockWidth, kBlockHeight, (p.connector() + 1) * kBlockWidth, 2 * kBlockHeight});
    out.locator = r.to_cells();

    out.left_exposed = {p.loc, p.loc + p.t};
    out.right_exposed = {2 * p.loc + p.t, 2 * p.loc + 2 * p.t};
    return out;
}

TileMap tile_map(const ReductionOutput& out) {
    return TileMap{{kFillerName, out.filler}, {kLinkerName, out.linker}, {kLocatorName, out.locator}, {kEncoderName, out.encoder}};
}

}  // namespace wangpoly
