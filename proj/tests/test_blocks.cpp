#include <doctest.h>

#include <random>

#include "reference_outlines.hpp"
#include "support.hpp"
#include "wangpoly/blocks.hpp"

using namespace wangpoly;

namespace {

SideLabel L(const char* text) { return parse_label(text); }

SideLabel random_label(std::mt19937& rng) {
    SideLabel l;
    l.bumps = LetterSet::from_bits(static_cast<std::uint8_t>(rng() & 31));
    l.dents = LetterSet::from_bits(static_cast<std::uint8_t>(rng() & 31));
    switch (rng() % 3) {
        case 0: break;
        case 1: l.mid = Mid::N; break;
        default: l.mid = Mid::F; break;
    }
    return l;
}

// Arithmetic area oracle: each labeled side adds its handle (10), plus bumps
// and a mid (9 each), and removes 10 handle cells and 9 per dent; the two
// shared holes (18) go once a side is labeled.
std::size_t area_formula(const BlockSpec& s) {
    long a = 84 * 14;
    for (const auto& side : {s.north, s.south}) {
        if (!side) continue;
        a += 10 + 9 * side->bumps.size() + (side->mid ? 9 : 0);
        a -= 10 + 9 * side->dents.size();
    }
    if (s.north || s.south) a -= 18;
    return static_cast<std::size_t>(a);
}

}  // namespace

TEST_SUITE("blocks") {
    TEST_CASE("labels parse and print canonically") {
        const SideLabel l = L("{C|N|A}");
        CHECK(l.bumps == LetterSet{Letter::C});
        CHECK(l.mid == Mid::N);
        CHECK(l.dents == LetterSet{Letter::A});
        CHECK(format_label(L("{R,A||M,C}")) == "{A,R||C,M}");
        CHECK(format_label(L("{||}")) == "{||}");
        for (const char* bad : {"{A|N,F|}", "{A,A||}", "{X||}", "A||C", "{A|C}", "{A|||}", "{|Q|}", "{,A||}"})
            CHECK_THROWS_AS(parse_label(bad), LabelError);
        CHECK_THROWS_WITH_AS(parse_label("{|N,F|}"), doctest::Contains("more than one mid"), LabelError);
    }

    TEST_CASE("building blocks match the reference outlines") {
        CHECK(equal_up_to_translation(support::rasterize(outlines::tiny_filler), plus_shape(0, 0)));
        CHECK(support::rasterize(outlines::linker) == build_block({L("{A||C}"), L("{A||C}")}));
        CHECK(support::rasterize(outlines::half_south) == build_block({std::nullopt, L("{||C,M}")}));
        CHECK(support::rasterize(outlines::blank) == build_block({L("{||}"), L("{||}")}));
        CHECK(support::rasterize(outlines::encoding_cf_cn) == build_block({L("{C|F|A}"), L("{C|N|A}")}));
    }

    TEST_CASE("blank block area") {
        CHECK(build_block({L("{||}"), L("{||}")}).size() == 1158);
        CHECK(build_block({}).size() == 84 * 14);
    }

    TEST_CASE("area law over random labels") {
        std::mt19937 rng(2024);
        for (int i = 0; i < 400; ++i) {
            BlockSpec s;
            if (rng() % 4) s.north = random_label(rng);
            if (rng() % 4) s.south = random_label(rng);
            CHECK(build_block(s).size() == area_formula(s));
        }
    }

    TEST_CASE("a half turn swaps the two labels") {
        std::mt19937 rng(99);
        for (int i = 0; i < 200; ++i) {
            BlockSpec s;
            if (rng() % 4) s.north = random_label(rng);
            if (rng() % 4) s.south = random_label(rng);
            CHECK(equal_up_to_translation(rotate180(build_block(s)), build_block({s.south, s.north})));
        }
    }

    TEST_CASE("the linker is two pieces") {
        CHECK(components(build_block({L("{A||C}"), L("{A||C}")})).size() == 2);
    }

    TEST_CASE("stacking overlap matches the label rule") {
        std::mt19937 rng(77);
        for (int i = 0; i < 20000; ++i) {
            const SideLabel s = random_label(rng), t = random_label(rng);
            const auto r = stack_residual({std::nullopt, s}, {t, std::nullopt});
            INFO(format_label(s), " over ", format_label(t));
            REQUIRE(r.overlap == !stackable(s, t));
        }
    }

    TEST_CASE("stacked residual holes are plus shaped") {
        std::mt19937 rng(8);
        for (int i = 0; i < 2000; ++i) {
            const SideLabel s = random_label(rng), t = random_label(rng);
            if (!stackable(s, t)) continue;
            const auto r = stack_residual({std::nullopt, s}, {t, std::nullopt});
            CHECK(r.irregular.empty());
            // Each unmatched dent leaves a hole, as does each of the four shared holes no mid reaches.
            const std::size_t expect = static_cast<std::size_t>(s.dents.size() - t.bumps.size() + t.dents.size() -
                                                                s.bumps.size()) +
                                       4 - (s.mid ? 1 : 0) - (t.mid ? 1 : 0);
            CHECK(r.holes.size() == expect);
        }
    }

    TEST_CASE("stack_residual needs facing labels") {
        CHECK_THROWS_AS(stack_residual({L("{||}"), std::nullopt}, {L("{||}"), L("{||}")}), std::invalid_argument);
    }

    TEST_CASE("handles forbid horizontal misalignment") {
        // Whenever the lower handle lands inside the upper block's columns, the
        // stack overlaps unless the blocks are aligned.
        const std::vector<BlockSpec> specs{{L("{||}"), L("{||}")},
                                           {L("{A||C}"), L("{A||C}")},
                                           {L("{C|F|A}"), L("{C|N|A}")},
                                           {L("{||A,C,M}"), L("{M||L}")}};
        for (const auto& lower : specs)
            for (const auto& upper : specs) {
                const CellSet lo = build_block(lower);
                const CellSet up = build_block(upper);
                for (coord_t dx = -83; dx <= 83; ++dx) {
                    if (dx == 0) continue;
                    const bool lower_handle_inside = 38 >= dx && 41 < dx + 84;
                    const bool upper_handle_inside = 45 >= -dx && 42 < -dx + 84;
                    if (!lower_handle_inside && !upper_handle_inside) continue;
                    CAPTURE(dx);
                    CHECK(intersects(lo, translate(up, {dx, kBlockHeight})));
                }
            }
    }

    TEST_CASE("three stacked blocks relay one bit") {
        const std::optional<Mid> mids[] = {std::nullopt, Mid::N, Mid::F};
        for (auto below : mids)
            for (auto above : mids) {
                SideLabel x{}, z{};
                x.mid = below;
                z.mid = above;
                const CellSet X = build_block({x, std::nullopt});
                const CellSet Y = translate(build_block({L("{||}"), L("{||}")}), {0, 14});
                const CellSet Z = translate(build_block({std::nullopt, z}), {0, 28});
                const bool overlap = intersects(X, Y) || intersects(Y, Z) || intersects(X, Z);
                CHECK(overlap == (below && above && *below != *above));
                if (overlap) continue;
                const CellSet band = CellSet::rectangle(0, 14, 84, 14) - X - Y - Z;
                const auto parts = components(band);
                for (const auto& p : parts) CHECK(equal_up_to_translation(p, plus_shape(0, 0)));
                std::set<int> claimed;  // 0 = upper hole, 1 = lower hole
                if (below) claimed.insert(*below == Mid::F ? 0 : 1);
                if (above) claimed.insert(*above == Mid::N ? 0 : 1);
                CHECK(parts.size() == 2 - claimed.size());
            }
    }

    TEST_CASE("rows of blocks") {
        const std::vector<BlockSpec> row{{L("{||}"), L("{||}")}, {L("{M||L}"), L("{M||L}")}};
        const CellSet r = build_row(row);
        CHECK(r == (build_block(row[0]) | translate(build_block(row[1]), {84, 0})));
        CHECK_THROWS_AS(build_row({}), std::invalid_argument);
    }

    TEST_CASE("block spec files") {
        const auto specs = parse_block_specs("# demo\nblock {C|N|A} {C|F|A}\nblock - {||}\n");
        REQUIRE(specs.size() == 2);
        CHECK_FALSE(specs[1].north.has_value());
        CHECK(parse_block_specs(format_block_specs(specs)) == specs);
        CHECK_THROWS_WITH_AS(parse_block_specs("block - -\n"), doctest::Contains("line 1"), LabelError);
        CHECK_THROWS_WITH_AS(parse_block_specs("\nblock {Z||} -\n"), doctest::Contains("line 2"), LabelError);
    }
}
