#include "wangpoly/commands.hpp"

#include <exception>

#include "wangpoly/assembly.hpp"
#include "wangpoly/blocks.hpp"
#include "wangpoly/formats.hpp"
#include "wangpoly/reduction.hpp"
#include "wangpoly/svg.hpp"
#include "wangpoly/tilesolve.hpp"
#include "wangpoly/wang.hpp"

namespace wangpoly {

namespace {

// Every command funnels its exceptions into exit code 2.
template <typename F>
CommandReport guarded(F&& body) {
    CommandReport r;
    try {
        body(r);
    } catch (const std::exception& e) {
        r.exit_code = 2;
        r.lines.push_back(std::string("error: ") + e.what());
    }
    return r;
}

WangSet load_wang(const std::filesystem::path& p, bool pad) {
    WangParseOptions o;
    o.pad_colors = pad;
    return parse_wang_set(read_file(p), o);
}

std::string params_line(const ReductionParams& p) {
    return "n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) + " t=" + std::to_string(p.t) +
           " SEG=" + std::to_string(p.seg) + " GAP=" + std::to_string(p.gap) + " LOC=" + std::to_string(p.loc) +
           " ENC=" + std::to_string(p.enc) + " PER=" + std::to_string(p.per);
}

void check_rows(int rows, int periods) {
    if (rows < 2 || rows % 2 != 0) throw std::invalid_argument("--rows must be even and at least 2");
    if (periods < 1) throw std::invalid_argument("--periods must be at least 1");
}

std::string factor_text(const std::string& s) { return s.empty() ? "-" : s; }

}  // namespace

std::string CommandReport::text() const {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

CommandReport cmd_reduce(const ReduceArgs& a) {
    return guarded([&](CommandReport& r) {
        const WangSet ws = load_wang(a.wang, a.pad_colors);
        const ReductionOutput red = reduce(ws);
        std::filesystem::create_directories(a.out_dir);
        for (const auto& [name, cells] : tile_map(red)) write_file(a.out_dir / (name + ".poly"), format_polyomino(name, cells));
        write_file(a.out_dir / "params.txt", format_params(red.params));
        write_file(a.out_dir / "slots.txt", format_slots(red));
        if (a.svg) write_file(a.out_dir / "tiles.svg", render_tiles(tile_map(red)));
        r.lines.push_back(params_line(red.params));
    });
}

CommandReport cmd_roundtrip(const RoundtripArgs& a) {
    return guarded([&](CommandReport& r) {
        check_rows(a.rows, a.periods);
        const WangSet ws = load_wang(a.wang, a.pad_colors);
        auto tiling = solve_torus(ws, a.rows, a.periods);
        if (!tiling) {
            r.exit_code = 1;
            r.lines.push_back("no wang tiling");
            return;
        }
        const ReductionOutput red = reduce(ws);
        const AssemblyPlan plan = assemble(red, *tiling);
        r.lines.push_back(format_census(census(plan.placements)));
        const Region region = plan.lattice.region();
        const PartitionReport rep = verify_partition(region, plan.placements, tile_map(red));
        if (!rep.ok) {
            r.exit_code = 1;
            r.lines.push_back("roundtrip: partition fails (uncovered=" + std::to_string(rep.uncovered.size()) +
                              " overlaps=" + std::to_string(rep.overlaps.size()) + ")");
            return;
        }
        const DecodeResult dec = decode(red, region, plan.placements);
        for (int y = 0; y < tiling->rows(); ++y)
            for (int p = 0; p < tiling->periods(); ++p)
                if (dec.tiling.at(y, p) != tiling->at(y, p)) {
                    r.exit_code = 1;
                    r.lines.push_back("roundtrip: site (" + std::to_string(y) + "," + std::to_string(p) + ") decoded " +
                                      ws.tiles[static_cast<std::size_t>(dec.tiling.at(y, p))].name + ", expected " +
                                      ws.tiles[static_cast<std::size_t>(tiling->at(y, p))].name);
                    return;
                }
        r.lines.push_back("roundtrip: ok");
    });
}

CommandReport cmd_render(const RenderArgs& a) {
    return guarded([&](CommandReport& r) {
        const TileMap tiles = load_tile_dir(a.tiles_dir);
        std::string svg;
        if (a.placements) {
            const PlacementFile file = parse_placements(read_file(*a.placements));
            Region region;
            if (file.region) {
                region = *file.region;
            } else {
                // Bounding box of everything placed.
                std::vector<Cell> all;
                for (const auto& p : file.placements) {
                    auto it = tiles.find(p.tile);
                    if (it == tiles.end()) throw FormatError("unknown tile '" + p.tile + "'");
                    if (auto b = it->second.bounds()) {
                        all.push_back({b->x0 + p.offset.dx, b->y0 + p.offset.dy});
                        all.push_back({b->x1 - 1 + p.offset.dx, b->y1 - 1 + p.offset.dy});
                    }
                }
                auto b = CellSet(all).bounds();
                if (!b) throw FormatError("nothing to render");
                region = {RegionKind::box, b->width(), b->height(), b->x0, b->y0};
            }
            svg = render_placements(tiles, file.placements, region);
            r.lines.push_back("rendered " + std::to_string(file.placements.size()) + " placements on " + format_region(region));
        } else {
            svg = render_tiles(tiles);
            r.lines.push_back("rendered " + std::to_string(tiles.size()) + " tiles");
        }
        write_file(a.out, svg);
    });
}

CommandReport cmd_assemble(const AssembleArgs& a) {
    return guarded([&](CommandReport& r) {
        const WangSet ws = load_wang(a.wang, a.pad_colors);
        DiamondTiling tiling;
        if (a.tiling) {
            tiling = parse_tiling(read_file(*a.tiling), ws);
        } else {
            check_rows(a.rows, a.periods);
            auto solved = solve_torus(ws, a.rows, a.periods);
            if (!solved) {
                r.exit_code = 1;
                r.lines.push_back("no wang tiling");
                return;
            }
            tiling = *solved;
        }
        const ReductionOutput red = reduce(ws);
        std::optional<AssemblyPlan> plan;
        try {
            plan = assemble(red, tiling);
        } catch (const AssemblyError& e) {
            r.exit_code = 1;
            r.lines.push_back(std::string("assembly failed: ") + e.what());
            return;
        }
        const Region region = plan->lattice.region();
        r.lines.push_back(format_census(census(plan->placements)));
        r.lines.push_back("region " + format_region(region));
        if (a.out) write_file(*a.out, format_placements({region, plan->placements}));
    });
}

CommandReport cmd_verify(const VerifyArgs& a) {
    return guarded([&](CommandReport& r) {
        const TileMap tiles = load_tile_dir(a.tiles_dir);
        const PlacementFile file = parse_placements(read_file(a.placements));
        std::optional<Region> region = file.region;
        if (a.region) region = parse_region(*a.region);
        if (!region) throw FormatError("no region given");
        for (const auto& p : file.placements)
            if (!tiles.count(p.tile)) throw FormatError("unknown tile '" + p.tile + "'");
        const PartitionReport rep = verify_partition(*region, file.placements, tiles);
        if (rep.ok) {
            r.lines.push_back("partition: ok");
        } else {
            r.exit_code = 1;
            r.lines.push_back("partition: fail uncovered=" + std::to_string(rep.uncovered.size()) +
                              " overlaps=" + std::to_string(rep.overlaps.size()) +
                              " outside=" + std::to_string(rep.outside.size()));
            auto first = [](const CellSet& cs) {
                const Cell c = *cs.begin();
                return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
            };
            if (!rep.overlaps.empty()) r.lines.push_back("first overlap " + first(rep.overlaps));
            if (!rep.uncovered.empty()) r.lines.push_back("first uncovered " + first(rep.uncovered));
        }
    });
}

CommandReport cmd_wang_solve(const WangSolveArgs& a) {
    return guarded([&](CommandReport& r) {
        check_rows(a.rows, a.periods);
        const WangSet ws = load_wang(a.wang, a.pad_colors);
        if (a.count) {
            const auto c = count_torus(ws, a.rows, a.periods);
            r.lines.push_back("count " + std::to_string(c));
            if (c == 0) r.exit_code = 1;
            return;
        }
        auto tiling = solve_torus(ws, a.rows, a.periods);
        if (!tiling) {
            r.exit_code = 1;
            r.lines.push_back("no wang tiling");
            return;
        }
        const std::string text = format_tiling(*tiling, ws);
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto nl = text.find('\n', pos);
            r.lines.push_back(text.substr(pos, nl - pos));
            pos = nl + 1;
        }
    });
}

CommandReport cmd_bn_check(const BnCheckArgs& a) {
    return guarded([&](CommandReport& r) {
        const NamedTile tile = parse_polyomino(read_file(a.tile));
        auto f = bn_factorize(tile.cells);
        if (!f) {
            r.exit_code = 1;
            r.lines.push_back("tiles-plane: no");
            return;
        }
        r.lines.push_back("tiles-plane: yes");
        r.lines.push_back("rotation " + std::to_string(f->rotation) + " A=" + factor_text(f->a) + " B=" + factor_text(f->b) +
                          " C=" + factor_text(f->c));
    });
}

CommandReport cmd_tile_solve(const TileSolveArgs& a) {
    return guarded([&](CommandReport& r) {
        const TileMap tiles = load_tile_dir(a.tiles_dir);
        const Region region = parse_region(a.region);
        std::vector<CellSet> list;
        std::vector<std::string> names;
        for (const auto& [name, cells] : tiles) {
            names.push_back(name);
            list.push_back(cells);
        }
        SearchLimits limits;
        limits.max_nodes = a.max_nodes;
        limits.max_time = std::chrono::milliseconds(a.max_ms);
        SearchResult res = exact_tile_search(list, region, limits);
        for (auto& p : res.placements) p.tile = names[std::stoul(p.tile)];
        r.lines.push_back(std::string("search: ") + status_name(res.status) + " nodes=" + std::to_string(res.nodes));
        if (res.status == SearchStatus::none) r.exit_code = 1;
        if (res.status == SearchStatus::budget_exhausted) r.exit_code = 2;
        if (res.status == SearchStatus::found && a.out) write_file(*a.out, format_placements({region, res.placements}));
    });
}

CommandReport cmd_block(const BlockArgs& a) {
    return guarded([&](CommandReport& r) {
        BlockSpec spec;
        if (a.north != "-") spec.north = parse_label(a.north);
        if (a.south != "-") spec.south = parse_label(a.south);
        const CellSet cells = build_block(spec);
        r.lines.push_back("block " + (spec.north ? format_label(*spec.north) : std::string("-")) + " " +
                          (spec.south ? format_label(*spec.south) : std::string("-")) + " area=" + std::to_string(cells.size()));
        if (a.out) write_file(*a.out, format_polyomino("block", cells));
    });
}

}  // namespace wangpoly
