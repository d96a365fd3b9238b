#include <doctest.h>

#include "support.hpp"
#include "wangpoly/stamps.hpp"
#include "wangpoly/tilesolve.hpp"

using namespace wangpoly;

namespace {

std::string rotate_left(const std::string& w, std::size_t r) { return w.substr(r) + w.substr(0, r); }

TileMap indexed(std::span<const CellSet> tiles) {
    TileMap m;
    for (std::size_t i = 0; i < tiles.size(); ++i) m.emplace(std::to_string(i), tiles[i]);
    return m;
}

bool simply_connected(const CellSet& p) { return is_connected(p) && boundary_loops(p).size() == 1; }

}  // namespace

TEST_SUITE("tilesolve") {
    TEST_CASE("hat reverses and complements") {
        CHECK(hat("RU") == "DL");
        CHECK(hat("") == "");
        CHECK(hat("RRULD") == "URDLL");
        CHECK(hat(hat("RULLDDR")) == "RULLDDR");
    }

    TEST_CASE("small shapes that tile") {
        for (const CellSet& p : {CellSet{{0, 0}}, CellSet::rectangle(0, 0, 2, 1), CellSet{{0, 0}, {1, 0}, {0, 1}},
                                 CellSet::rectangle(0, 0, 3, 2)}) {
            const auto f = bn_factorize(p);
            REQUIRE(f.has_value());
            const std::string w = boundary_word(p);
            CHECK(f->a + f->b + f->c + f->a_hat + f->b_hat + f->c_hat == rotate_left(w, f->rotation));
            CHECK(f->a_hat == hat(f->a));
            CHECK(f->b_hat == hat(f->b));
            CHECK(f->c_hat == hat(f->c));
        }
    }

    TEST_CASE("the tiny filler does not tile") {
        CHECK_FALSE(bn_factorize(plus_shape(0, 0)).has_value());
        CHECK(boundary_word(plus_shape(0, 0)).size() == 20);
    }

    TEST_CASE("the plus pentomino is a pseudo-square") {
        const CellSet x{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}};
        const auto f = bn_factorize(x);
        REQUIRE(f.has_value());
        CHECK(f->pseudo_square());
    }

    TEST_CASE("factorization needs a simply connected tile") {
        CHECK_THROWS_AS(bn_factorize(CellSet{{0, 0}, {2, 0}}), GeometryError);
        CHECK_THROWS_AS(bn_factorize(CellSet::rectangle(0, 0, 3, 3) - CellSet{{1, 1}}), GeometryError);
        CHECK_FALSE(bn_factorize_word("RRUL").has_value());
    }

    TEST_CASE("search covers boxes and tori") {
        const std::vector<CellSet> domino{CellSet::rectangle(0, 0, 2, 1)};
        auto r = exact_tile_search(domino, Region::box(4, 3));
        REQUIRE(r.status == SearchStatus::found);
        CHECK(verify_partition(Region::box(4, 3), r.placements, indexed(domino)).ok);
        CHECK(exact_tile_search(domino, Region::box(3, 3)).status == SearchStatus::none);
        CHECK(exact_tile_search(domino, Region::torus(3, 1)).status == SearchStatus::none);

        const std::vector<CellSet> pair{CellSet::rectangle(0, 0, 3, 1), CellSet{{0, 0}}};
        r = exact_tile_search(pair, Region::torus(4, 2));
        REQUIRE(r.status == SearchStatus::found);
        CHECK(verify_partition(Region::torus(4, 2), r.placements, indexed(pair)).ok);
    }

    TEST_CASE("a tile wider than the torus cannot overlap itself") {
        const std::vector<CellSet> bar{CellSet::rectangle(0, 0, 3, 1)};
        CHECK(exact_tile_search(bar, Region::torus(2, 3)).status == SearchStatus::none);
        const auto r = exact_tile_search(bar, Region::torus(3, 2));
        CHECK(r.status == SearchStatus::found);
    }

    TEST_CASE("filler only tori") {
        const std::vector<CellSet> filler{plus_shape(0, 0)};
        for (auto [a, b] : {std::pair{3, 3}, {9, 1}, {9, 2}, {3, 6}, {9, 3}})
            CHECK(exact_tile_search(filler, Region::torus(a, b)).status == SearchStatus::none);
    }

    TEST_CASE("budgets stop the search") {
        const std::vector<CellSet> domino{CellSet::rectangle(0, 0, 2, 1)};
        SearchLimits tight;
        tight.max_nodes = 3;
        const auto r = exact_tile_search(domino, Region::box(9, 9), tight);
        CHECK(r.status == SearchStatus::budget_exhausted);
        CHECK(std::string(status_name(r.status)) == "budget_exhausted");
        CHECK(std::string(status_name(SearchStatus::found)) == "found");
        CHECK_THROWS_AS(exact_tile_search(std::vector<CellSet>{}, Region::box(1, 1)), std::invalid_argument);
    }

    TEST_CASE("factorization agrees with search on every polyomino up to seven cells") {
        // A lattice tiling by a tile of s cells has s Z^2 in its period
        // lattice, so the s x s torus decides it.
        int yes = 0, no = 0;
        for (const CellSet& p : support::fixed_polyominoes(7)) {
            if (!simply_connected(p)) continue;
            const auto s = static_cast<coord_t>(p.size());
            const bool bn = bn_factorize(p).has_value();
            const std::vector<CellSet> one{p};
            const auto r = exact_tile_search(one, Region::torus(s, s));
            REQUIRE(r.status != SearchStatus::budget_exhausted);
            CAPTURE(boundary_word(p));
            CHECK(bn == (r.status == SearchStatus::found));
            (bn ? yes : no)++;
        }
        CHECK(yes > 0);
        CHECK(no > 0);
    }
}
