#include "wangpoly/assembly.hpp"

#include <algorithm>
#include <deque>

namespace wangpoly {

namespace {

coord_t wrap(coord_t v, coord_t m) { return ((v % m) + m) % m; }

std::string describe(const Placement& p) {
    return p.tile + " at (" + std::to_string(p.offset.dx) + "," + std::to_string(p.offset.dy) + ")";
}

// Dense owner map of the torus: index of the placement covering each cell.
class OwnerGrid {
public:
    explicit OwnerGrid(const Region& region)
        : w_(region.width), h_(region.height), owner_(static_cast<std::size_t>(w_ * h_), -1) {}

    void place(const std::vector<Placement>& all, std::size_t index, const CellSet& cells) {
        const Vec off = all[index].offset;
        for (Cell c : cells) {
            const Cell r{wrap(c.x + off.dx, w_), wrap(c.y + off.dy, h_)};
            auto& slot = owner_[at(r)];
            if (slot >= 0) {
                const Placement& other = all[static_cast<std::size_t>(slot)];
                throw AssemblyError("overlap between " + describe(other) + " and " + describe(all[index]) + " at cell (" +
                                        std::to_string(r.x) + "," + std::to_string(r.y) + ")",
                                    other, all[index], r);
            }
            slot = static_cast<std::int32_t>(index);
        }
    }

private:
    std::size_t at(Cell c) const { return static_cast<std::size_t>(c.y * w_ + c.x); }

    coord_t w_, h_;
    std::vector<std::int32_t> owner_;
};

bool violates(const SlotGrid& k, Site s, Site other) {
    return k[static_cast<std::size_t>(s.row)][static_cast<std::size_t>(s.period)] ==
           k[static_cast<std::size_t>(other.row)][static_cast<std::size_t>(other.period)];
}

std::int64_t& slot_at(SlotGrid& k, Site s) { return k[static_cast<std::size_t>(s.row)][static_cast<std::size_t>(s.period)]; }

bool search_slots(const DiamondTiling& tiling, SlotGrid& k, int index) {
    const int total = tiling.rows() * tiling.periods();
    if (index == total) return true;
    const Site s{index / tiling.periods(), index % tiling.periods()};
    const int tile = tiling.at(s);
    const Site nbrs[] = {tiling.lower_left(s), tiling.lower_right(s), tiling.upper_left(s), tiling.upper_right(s)};
    for (int j = 0; j < 3; ++j) {
        slot_at(k, s) = slot_number(tile, j);
        bool ok = true;
        for (Site o : nbrs) {
            const int oi = o.row * tiling.periods() + o.period;
            if (oi < index && violates(k, s, o)) ok = false;
        }
        if (ok && search_slots(tiling, k, index + 1)) return true;
    }
    slot_at(k, s) = 0;
    return false;
}

}  // namespace

Lattice::Lattice(const ReductionParams& p, int rows, int periods) : params(p), rows(rows), periods(periods) {
    if (rows < 2 || rows % 2 != 0) throw AssemblyError("lattice rows must be even and positive");
    if (periods < 1) throw AssemblyError("lattice periods must be positive");
}

std::int64_t Lattice::origin(Site s) const {
    return wrap(s.row * (params.loc + params.t) + s.period * params.per, width_blocks());
}

bool slots_admissible(const DiamondTiling& tiling, const SlotGrid& slots) {
    for (int y = 0; y < tiling.rows(); ++y)
        for (int p = 0; p < tiling.periods(); ++p) {
            const Site s{y, p};
            if (violates(slots, s, tiling.lower_left(s)) || violates(slots, s, tiling.lower_right(s)))
                return false;
        }
    return true;
}

SlotGrid choose_slots(const DiamondTiling& tiling, int n) {
    const auto rows = static_cast<std::size_t>(tiling.rows());
    const auto periods = static_cast<std::size_t>(tiling.periods());
    for (int y = 0; y < tiling.rows(); ++y)
        for (int p = 0; p < tiling.periods(); ++p)
            if (tiling.at(y, p) < 0 || tiling.at(y, p) >= n) throw AssemblyError("tile index out of range");

    SlotGrid k(rows, std::vector<std::int64_t>(periods, 0));
    for (int p = 0; p < tiling.periods(); ++p) slot_at(k, {0, p}) = slot_number(tiling.at(0, p), 0);

    auto pick = [&](Site s, std::span<const Site> avoid) {
        for (int j = 0; j < 3; ++j) {
            const std::int64_t cand = slot_number(tiling.at(s), j);
            if (std::none_of(avoid.begin(), avoid.end(), [&](Site o) { return slot_at(k, o) == cand; })) {
                slot_at(k, s) = cand;
                return true;
            }
        }
        return false;
    };

    for (int y = 1; y < tiling.rows(); ++y)
        for (int p = 0; p < tiling.periods(); ++p) {
            const Site s{y, p};
            const Site lower[] = {tiling.lower_left(s), tiling.lower_right(s)};
            if (!pick(s, lower)) throw AssemblyError("no admissible copy: three lower constraints cannot exclude three copies");
        }

    // Row 0 was fixed before row R-1 existed; repair the wrap seam.
    for (int p = 0; p < tiling.periods(); ++p) {
        const Site s{0, p};
        if (!violates(k, s, tiling.lower_left(s)) && !violates(k, s, tiling.lower_right(s))) continue;
        const Site all[] = {tiling.lower_left(s), tiling.lower_right(s), tiling.upper_left(s), tiling.upper_right(s)};
        pick(s, all);
    }
    if (slots_admissible(tiling, k)) return k;

    for (auto& row : k) std::fill(row.begin(), row.end(), 0);
    if (!search_slots(tiling, k, 0)) throw AssemblyError("no slot assignment avoids totally aligned copies on this torus");
    return k;
}

Census census(std::span<const Placement> placements) {
    Census c;
    for (const auto& p : placements) {
        if (p.tile == kLocatorName) ++c.locators;
        else if (p.tile == kEncoderName) ++c.encoders;
        else if (p.tile == kLinkerName) ++c.linkers;
        else if (p.tile == kFillerName) ++c.fillers;
    }
    return c;
}

std::string format_census(const Census& c) {
    return "locators=" + std::to_string(c.locators) + " encoders=" + std::to_string(c.encoders) +
           " linkers=" + std::to_string(c.linkers) + " fillers=" + std::to_string(c.fillers);
}

AssemblyPlan assemble(const ReductionOutput& red, const DiamondTiling& tiling) {
    // No combinatorial pre-check: a color mismatch must surface as a geometric overlap.
    const ReductionParams& P = red.params;
    AssemblyPlan plan{Lattice(P, tiling.rows(), tiling.periods()), choose_slots(tiling, P.n), {}};
    const Lattice& L = plan.lattice;
    const Region region = L.region();
    auto& out = plan.placements;

    auto at_block = [&](std::int64_t column, coord_t y) {
        return Vec{wrap(column, L.width_blocks()) * kBlockWidth, wrap(y, L.height())};
    };
    for (int y = 0; y < L.rows; ++y)
        for (int p = 0; p < L.periods; ++p)
            out.push_back({kLocatorName, at_block(L.origin({y, p}), 2 * y * kBlockHeight)});

    std::vector<std::int64_t> starts;
    for (int y = 0; y < L.rows; ++y)
        for (int p = 0; p < L.periods; ++p) {
            const std::int64_t s = L.encoder_start(plan.slots[static_cast<std::size_t>(y)][static_cast<std::size_t>(p)]);
            starts.push_back(s);
            out.push_back({kEncoderName, at_block(L.origin({y, p}) + s, (2 * y + 1) * kBlockHeight)});
        }

    std::size_t site = 0;
    for (int y = 0; y < L.rows; ++y)
        for (int p = 0; p < L.periods; ++p, ++site) {
            const std::int64_t o = L.origin({y, p});
            const std::int64_t s = starts[site];
            const coord_t enc_y = (2 * y + 1) * kBlockHeight;
            for (std::int64_t c = P.gap + 1; c < s; ++c) out.push_back({kLinkerName, at_block(o + c, enc_y)});
            for (std::int64_t c = s + P.enc; c < P.per + P.gap; ++c) out.push_back({kLinkerName, at_block(o + c, enc_y)});
            for (const ColumnRange& hole : {red.left_exposed, red.right_exposed})
                for (std::int64_t c = hole.begin; c < hole.end; ++c)
                    out.push_back({kLinkerName, at_block(o + c, 2 * y * kBlockHeight)});
        }

    const TileMap tiles = tile_map(red);
    OwnerGrid owner(region);
    for (std::size_t i = 0; i < out.size(); ++i) owner.place(out, i, tiles.find(out[i].tile)->second);

    auto fillers = fill_holes(region, out, tiles, kFillerName);
    out.insert(out.end(), fillers.begin(), fillers.end());
    return plan;
}

std::vector<Placement> fill_holes(const Region& region, std::span<const Placement> placements, const TileMap& tiles,
                                  const std::string& filler_name) {
    auto fit = tiles.find(filler_name);
    if (fit == tiles.end() || fit->second.empty()) throw AssemblyError("unknown filler tile '" + filler_name + "'");
    const CellSet& filler = fit->second;
    const bool torus = region.kind == RegionKind::torus;
    const coord_t w = region.width, h = region.height;
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(w * h), 0);
    auto idx = [&](coord_t x, coord_t y) { return static_cast<std::size_t>(y * w + x); };
    auto reduce_cell = [&](Cell c) -> std::optional<Cell> {
        if (torus) return Cell{wrap(c.x - region.x0, w), wrap(c.y - region.y0, h)};
        Cell r{c.x - region.x0, c.y - region.y0};
        if (r.x < 0 || r.y < 0 || r.x >= w || r.y >= h) return std::nullopt;
        return r;
    };
    for (const auto& p : placements) {
        auto it = tiles.find(p.tile);
        if (it == tiles.end()) throw AssemblyError("unknown tile '" + p.tile + "'");
        for (Cell c : it->second)
            if (auto r = reduce_cell({c.x + p.offset.dx, c.y + p.offset.dy})) covered[idx(r->x, r->y)] = 1;
    }

    const Cell f0 = *filler.begin();
    std::vector<Placement> out;
    std::vector<Cell> comp;
    std::deque<Cell> queue;
    for (coord_t y = 0; y < h; ++y)
        for (coord_t x = 0; x < w; ++x) {
            if (covered[idx(x, y)]) continue;
            comp.clear();
            covered[idx(x, y)] = 1;
            queue.push_back({x, y});
            while (!queue.empty()) {
                Cell c = queue.front();
                queue.pop_front();
                comp.push_back(c);
                const Cell nb[] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
                for (Cell d : nb) {
                    if (!torus && (d.x < 0 || d.y < 0 || d.x >= w || d.y >= h)) continue;
                    d = {wrap(d.x, w), wrap(d.y, h)};
                    if (covered[idx(d.x, d.y)]) continue;
                    covered[idx(d.x, d.y)] = 1;
                    queue.push_back(d);
                }
            }
            std::sort(comp.begin(), comp.end());
            std::optional<Vec> anchor;
            if (comp.size() == filler.size()) {
                for (Cell c : comp) {
                    const Vec v{c.x - f0.x, c.y - f0.y};
                    bool all = true;
                    for (Cell f : filler) {
                        auto r = reduce_cell({f.x + v.dx + region.x0, f.y + v.dy + region.y0});
                        if (!r || !std::binary_search(comp.begin(), comp.end(), *r)) {
                            all = false;
                            break;
                        }
                    }
                    if (all) {
                        anchor = v;
                        break;
                    }
                }
            }
            if (!anchor) {
                std::string cells;
                for (std::size_t i = 0; i < comp.size() && i < 64; ++i)
                    cells += " (" + std::to_string(comp[i].x + region.x0) + "," + std::to_string(comp[i].y + region.y0) + ")";
                if (comp.size() > 64) cells += " ...";
                throw AssemblyError("uncovered component of " + std::to_string(comp.size()) +
                                    " cells is not a filler translate:" + cells);
            }
            out.push_back({filler_name, {anchor->dx + region.x0, anchor->dy + region.y0}});
        }
    return out;
}

DecodeResult decode(const ReductionOutput& red, const Region& region, std::span<const Placement> placements) {
    const ReductionParams& P = red.params;
    const coord_t period_cells = P.per * kBlockWidth;
    const coord_t row_cells = 2 * kBlockHeight;
    if (region.kind != RegionKind::torus || region.width % period_cells != 0 || region.height % row_cells != 0)
        throw AssemblyError("region is not a lattice torus for these parameters");
    const int R = static_cast<int>(region.height / row_cells);
    const int Q = static_cast<int>(region.width / period_cells);
    const Lattice L(P, R, Q);

    auto first = std::find_if(placements.begin(), placements.end(), [](auto& p) { return p.tile == kLocatorName; });
    if (first == placements.end()) throw AssemblyError("no locator placement to anchor the lattice");
    const Vec anchor = first->offset;

    struct Pos {
        int row;
        int period;
        std::int64_t rel;  // block offset from the site's locator origin
    };
    auto locate = [&](const Placement& pl, coord_t dy_extra) -> Pos {
        const coord_t dx = wrap(pl.offset.dx - anchor.dx, region.width);
        const coord_t dy = wrap(pl.offset.dy - anchor.dy - dy_extra, region.height);
        if (dx % kBlockWidth != 0 || dy % row_cells != 0) throw AssemblyError(describe(pl) + " is off the block lattice");
        const int y = static_cast<int>(dy / row_cells);
        const std::int64_t rel = wrap(dx / kBlockWidth - y * (P.loc + P.t), L.width_blocks());
        return {y, static_cast<int>(rel / P.per), rel % P.per};
    };

    std::vector<std::vector<bool>> has_locator(static_cast<std::size_t>(R), std::vector<bool>(static_cast<std::size_t>(Q)));
    DecodeResult out{DiamondTiling(R, Q, -1), SlotGrid(static_cast<std::size_t>(R), std::vector<std::int64_t>(static_cast<std::size_t>(Q), 0))};

    auto probe = [&](std::int64_t block, coord_t x, coord_t y) { return red.encoder.contains({block * kBlockWidth + x, y}); };
    auto read_mid = [&](std::int64_t block, Side side) -> std::optional<Mid> {
        const bool n = side == Side::north ? probe(block, 42, 18) : probe(block, 41, -5);
        const bool f = side == Side::north ? probe(block, 41, 23) : probe(block, 42, -10);
        if (n == f) return std::nullopt;
        return n ? Mid::N : Mid::F;
    };
    auto check_bits = [&](std::int64_t first_block, Side side, int color, const Placement& pl) {
        auto want = color_bits(color, P.t);
        for (int q = 0; q < P.t; ++q)
            if (read_mid(first_block + q, side) != want[static_cast<std::size_t>(q)])
                throw AssemblyError("exposed mids of " + describe(pl) + " disagree with the slot table");
    };

    for (const auto& pl : placements) {
        if (pl.tile == kLocatorName) {
            Pos pos = locate(pl, 0);
            if (pos.rel != 0) throw AssemblyError(describe(pl) + " is off the locator lattice");
            auto&& seen = has_locator[static_cast<std::size_t>(pos.row)][static_cast<std::size_t>(pos.period)];
            if (seen) throw AssemblyError("two locators at one lattice site");
            seen = true;
        } else if (pl.tile == kEncoderName) {
            Pos pos = locate(pl, kBlockHeight);
            if (pos.rel < P.gap + 1 || pos.rel > 2 * P.gap) throw AssemblyError(describe(pl) + " is outside its shift range");
            const std::int64_t num = P.loc - 1 - pos.rel;
            if (num % (P.t + 2) != 0) throw AssemblyError(describe(pl) + " is not at a slot boundary");
            const std::int64_t k = num / (P.t + 2) + 1;
            auto entry = slot_lookup(k, P.n);
            if (!entry) throw AssemblyError("exposed slot " + std::to_string(k) + " of " + describe(pl) + " is not a used power of two");
            int& tile = out.tiling.at(pos.row, pos.period);
            if (tile >= 0) throw AssemblyError("two encoders at one lattice site");
            tile = entry->tile;
            out.slots[static_cast<std::size_t>(pos.row)][static_cast<std::size_t>(pos.period)] = k;

            const WangTile& wt = red.ws.tiles[static_cast<std::size_t>(entry->tile)];
            const std::int64_t left = (k - 1) * (P.t + 2) + 1;
            const std::int64_t right = left + P.seg + P.gap;
            check_bits(left, Side::north, wt.nw, pl);
            check_bits(left, Side::south, wt.sw, pl);
            check_bits(right, Side::north, wt.ne, pl);
            check_bits(right, Side::south, wt.se, pl);
        }
    }
    for (int y = 0; y < R; ++y)
        for (int p = 0; p < Q; ++p) {
            if (!has_locator[static_cast<std::size_t>(y)][static_cast<std::size_t>(p)])
                throw AssemblyError("missing locator at site (" + std::to_string(y) + "," + std::to_string(p) + ")");
            if (out.tiling.at(y, p) < 0)
                throw AssemblyError("missing encoder at site (" + std::to_string(y) + "," + std::to_string(p) + ")");
        }
    return out;
}

}  // namespace wangpoly
