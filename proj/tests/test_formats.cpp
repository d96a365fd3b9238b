#include <doctest.h>

#include <filesystem>
#include <random>

#include "wangpoly/formats.hpp"
#include "wangpoly/svg.hpp"

using namespace wangpoly;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / ("wangpoly_formats_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_SUITE("formats") {
    TEST_CASE("polyomino files round trip") {
        std::mt19937 rng(6);
        std::uniform_int_distribution<coord_t> d(-1000, 1000);
        std::vector<Cell> v;
        for (int i = 0; i < 300; ++i) v.push_back({d(rng), d(rng)});
        const CellSet cs(v);
        const NamedTile t = parse_polyomino(format_polyomino("blob", cs));
        CHECK(t.name == "blob");
        CHECK(t.cells == cs);
        CHECK(format_polyomino("p", CellSet{{0, 0}, {-3, 2}}) == "tile p\ncell 0 0\ncell -3 2\n");
    }

    TEST_CASE("polyomino errors") {
        CHECK_THROWS_AS(parse_polyomino("cell 0 0\n"), FormatError);
        CHECK_THROWS_AS(parse_polyomino("tile a\ncell 0 0\ncell 0 0\n"), FormatError);
        CHECK_THROWS_AS(parse_polyomino("tile a\n"), FormatError);
        CHECK_THROWS_AS(parse_polyomino("tile a\ntile b\ncell 0 0\n"), FormatError);
        CHECK_THROWS_WITH_AS(parse_polyomino("tile a\ncell 1 x\n"), doctest::Contains("line 2"), FormatError);
        CHECK_THROWS_AS(parse_polyomino("tile a\ncell 1 2 3\n"), FormatError);
        CHECK_THROWS_AS(parse_polyomino("tile a\nsquare 1 2\n"), FormatError);
        CHECK_NOTHROW(parse_polyomino("# comment\ntile a # name\ncell 1 2\n"));
    }

    TEST_CASE("tile directories") {
        const fs::path dir = scratch_dir("tiles");
        write_file(dir / "one.poly", format_polyomino("one", CellSet{{0, 0}}));
        write_file(dir / "two.poly", format_polyomino("two", CellSet{{0, 0}, {1, 0}}));
        write_file(dir / "notes.txt", "ignored");
        const TileMap tiles = load_tile_dir(dir);
        CHECK(tiles.size() == 2);
        CHECK(tiles.at("two").size() == 2);
        write_file(dir / "dup.poly", format_polyomino("one", CellSet{{5, 5}}));
        CHECK_THROWS_AS(load_tile_dir(dir), FormatError);
        CHECK_THROWS_AS(load_tile_dir(dir / "missing"), FormatError);
        CHECK_THROWS_AS(load_tile_dir(scratch_dir("empty")), FormatError);
        CHECK_THROWS_AS(read_file(dir / "absent.poly"), FormatError);
        fs::remove_all(dir);
    }

    TEST_CASE("placement files round trip") {
        PlacementFile f{Region::torus(12, 4), {{"a", {0, 0}}, {"b", {-5, 9}}}};
        const std::string text = format_placements(f);
        CHECK(text == "region torus:12x4\nplace a 0 0\nplace b -5 9\n");
        const PlacementFile g = parse_placements(text);
        CHECK(g.region == f.region);
        CHECK(g.placements == f.placements);
        CHECK_FALSE(parse_placements("place a 1 1\n").region.has_value());
        CHECK_THROWS_AS(parse_placements("region box:2x2\nregion box:2x2\n"), FormatError);
        CHECK_THROWS_AS(parse_placements("region disk:2\n"), FormatError);
        CHECK_THROWS_AS(parse_placements("place a 1\n"), FormatError);
        CHECK_THROWS_AS(parse_placements("put a 1 1\n"), FormatError);
    }

    TEST_CASE("parameter files") {
        const ReductionParams p = params(3, 4);
        const std::string text = format_params(p);
        CHECK(text.find("LOC 2043\n") != std::string::npos);
        CHECK(parse_params(text) == p);
        CHECK_THROWS_AS(parse_params("n 3\nm 4\n"), FormatError);
        std::string tampered = text;
        tampered.replace(tampered.find("GAP 1021"), 8, "GAP 1020");
        CHECK_THROWS_AS(parse_params(tampered), FormatError);
    }

    TEST_CASE("slot listing") {
        WangParseOptions o;
        o.pad_colors = true;
        const ReductionOutput red = reduce(parse_wang_set("tile u nw=g ne=g sw=g se=g\n", o));
        CHECK(format_slots(red) == "slot 1 tile u copy 0\nslot 2 tile u copy 1\nslot 4 tile u copy 2\n");
    }

    TEST_CASE("svg output") {
        CHECK(tile_color("filler") == tile_color("filler"));
        CHECK(tile_color("filler") != tile_color("linker"));
        CHECK(tile_color("x").size() == 7);
        const TileMap tiles{{"sq", CellSet::rectangle(0, 0, 2, 2)}};
        const std::string svg = render_placements(tiles, std::vector<Placement>{{"sq", {0, 0}}, {"sq", {3, 1}}},
                                                  Region::torus(4, 3));
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
        std::size_t paths = 0;
        for (auto pos = svg.find("<path"); pos != std::string::npos; pos = svg.find("<path", pos + 1)) ++paths;
        CHECK(paths == 2);
        CHECK_THROWS_AS(render_placements(tiles, std::vector<Placement>{{"zz", {0, 0}}}, Region::box(2, 2)),
                        GeometryError);
        CHECK(render_tiles(tiles).find("<path") != std::string::npos);
    }
}
