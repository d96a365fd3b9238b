#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wangpoly/geometry.hpp"

namespace wangpoly {

/// Boundary word split as A B C hat(A) hat(B) hat(C) after rotating it left
/// by `rotation` letters. hat reverses a word and swaps U/D and L/R.
struct BNFactorization {
    std::size_t rotation = 0;
    std::string a, b, c;
    std::string a_hat, b_hat, c_hat;

    bool pseudo_square() const { return a.empty() || b.empty() || c.empty(); }
};

std::string hat(std::string_view word);

/// Some factorization of the boundary word if one exists. The cell set must
/// be connected without holes (GeometryError otherwise).
std::optional<BNFactorization> bn_factorize(const CellSet& tile);
std::optional<BNFactorization> bn_factorize_word(std::string_view word);

struct SearchLimits {
    std::uint64_t max_nodes = 50'000'000;
    std::chrono::milliseconds max_time{60'000};
};

enum class SearchStatus { found, none, budget_exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::vector<Placement> placements;  // tiles named by their index in the input list
    std::uint64_t nodes = 0;
};

const char* status_name(SearchStatus s);

/// Exact cover of `region` by translates of the given tiles (any number of
/// each). Branches on the first uncovered cell in row-major order, trying
/// tiles in order and each tile cell as the covering anchor in row-major order.
SearchResult exact_tile_search(std::span<const CellSet> tiles, const Region& region, const SearchLimits& limits = {});

}  // namespace wangpoly
