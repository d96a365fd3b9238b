#include <CLI11.hpp>

#include <iostream>

#include "wangpoly/commands.hpp"

using namespace wangpoly;

int main(int argc, char** argv) {
    CLI::App app{"Wang tiles to four-polyomino translational tiling toolkit"};
    app.require_subcommand(1);

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "build the four tiles for a Wang set");
    reduce->add_option("--wang", reduce_args.wang, "Wang set file")->required()->check(CLI::ExistingFile);
    reduce->add_option("--out", reduce_args.out_dir, "output directory")->required();
    reduce->add_flag("--pad-colors", reduce_args.pad_colors, "add an unused color when only one occurs");
    reduce->add_flag("--svg", reduce_args.svg, "also write tiles.svg");

    RoundtripArgs rt_args;
    auto* roundtrip = app.add_subcommand("roundtrip", "solve, assemble, verify and decode on a torus");
    roundtrip->add_option("--wang", rt_args.wang)->required()->check(CLI::ExistingFile);
    roundtrip->add_option("--rows", rt_args.rows, "encoder rows R (even)");
    roundtrip->add_option("--periods", rt_args.periods, "lattice periods Q");
    roundtrip->add_flag("--pad-colors", rt_args.pad_colors);

    RenderArgs render_args;
    std::string render_placements;
    auto* render = app.add_subcommand("render", "write an SVG of tiles or of a placement file");
    render->add_option("--tiles", render_args.tiles_dir, "directory of .poly files")->required()->check(CLI::ExistingDirectory);
    render->add_option("--placements", render_placements)->check(CLI::ExistingFile);
    render->add_option("--out", render_args.out, "SVG path")->required();

    AssembleArgs asm_args;
    std::string asm_tiling, asm_out;
    auto* assemble = app.add_subcommand("assemble", "place the four tiles for a Wang torus tiling");
    assemble->add_option("--wang", asm_args.wang)->required()->check(CLI::ExistingFile);
    assemble->add_option("--tiling", asm_tiling, "tiling file (solved on the torus when absent)")->check(CLI::ExistingFile);
    assemble->add_option("--rows", asm_args.rows);
    assemble->add_option("--periods", asm_args.periods);
    assemble->add_option("--out", asm_out, "placement file to write");
    assemble->add_flag("--pad-colors", asm_args.pad_colors);

    VerifyArgs verify_args;
    std::string verify_region;
    auto* verify = app.add_subcommand("verify", "check that placements partition a region");
    verify->add_option("--tiles", verify_args.tiles_dir)->required()->check(CLI::ExistingDirectory);
    verify->add_option("--placements", verify_args.placements)->required()->check(CLI::ExistingFile);
    verify->add_option("--region", verify_region, "box:WxH or torus:WxH");

    WangSolveArgs ws_args;
    auto* wang_solve = app.add_subcommand("wang-solve", "find a Wang tiling of the staggered torus");
    wang_solve->add_option("--wang", ws_args.wang)->required()->check(CLI::ExistingFile);
    wang_solve->add_option("--rows", ws_args.rows);
    wang_solve->add_option("--periods", ws_args.periods);
    wang_solve->add_flag("--count", ws_args.count, "count all tilings instead");
    wang_solve->add_flag("--pad-colors", ws_args.pad_colors);

    BnCheckArgs bn_args;
    auto* bn = app.add_subcommand("bn-check", "boundary-word test for tiling the plane by translation");
    bn->add_option("tile", bn_args.tile, "polyomino file")->required()->check(CLI::ExistingFile);

    TileSolveArgs ts_args;
    std::string ts_out;
    auto* tile_solve = app.add_subcommand("tile-solve", "exact translational tiling search");
    tile_solve->add_option("--tiles", ts_args.tiles_dir)->required()->check(CLI::ExistingDirectory);
    tile_solve->add_option("--region", ts_args.region)->required();
    tile_solve->add_option("--max-nodes", ts_args.max_nodes);
    tile_solve->add_option("--max-ms", ts_args.max_ms);
    tile_solve->add_option("--out", ts_out, "placement file for a found tiling");

    BlockArgs block_args;
    std::string block_out;
    auto* block = app.add_subcommand("block", "build one building block from its labels");
    block->add_option("--north", block_args.north, "label like {C|N|A} or -")->required();
    block->add_option("--south", block_args.south)->required();
    block->add_option("--out", block_out, "polyomino file to write");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CommandReport rep;
    if (*reduce) {
        rep = cmd_reduce(reduce_args);
    } else if (*roundtrip) {
        rep = cmd_roundtrip(rt_args);
    } else if (*render) {
        if (!render_placements.empty()) render_args.placements = render_placements;
        rep = cmd_render(render_args);
    } else if (*assemble) {
        if (!asm_tiling.empty()) asm_args.tiling = asm_tiling;
        if (!asm_out.empty()) asm_args.out = asm_out;
        rep = cmd_assemble(asm_args);
    } else if (*verify) {
        if (!verify_region.empty()) verify_args.region = verify_region;
        rep = cmd_verify(verify_args);
    } else if (*wang_solve) {
        rep = cmd_wang_solve(ws_args);
    } else if (*bn) {
        rep = cmd_bn_check(bn_args);
    } else if (*tile_solve) {
        if (!ts_out.empty()) ts_args.out = ts_out;
        rep = cmd_tile_solve(ts_args);
    } else if (*block) {
        if (!block_out.empty()) block_args.out = block_out;
        rep = cmd_block(block_args);
    }
    (rep.exit_code == 2 ? std::cerr : std::cout) << rep.text();
    return rep.exit_code;
}
