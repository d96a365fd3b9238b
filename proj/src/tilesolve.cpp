#include "wangpoly/tilesolve.hpp"

#include <algorithm>

namespace wangpoly {

namespace {

char complement(char c) {
    switch (c) {
        case 'U': return 'D';
        case 'D': return 'U';
        case 'L': return 'R';
        case 'R': return 'L';
    }
    throw std::invalid_argument(std::string("not a boundary letter: ") + c);
}

coord_t wrap(coord_t v, coord_t m) { return ((v % m) + m) % m; }

class Search {
public:
    Search(std::span<const CellSet> tiles, const Region& region, const SearchLimits& limits)
        : region_(region), limits_(limits), torus_(region.kind == RegionKind::torus),
          occupied_(static_cast<std::size_t>(region.width * region.height), 0) {
        for (const auto& t : tiles) {
            if (t.empty()) throw std::invalid_argument("empty tile in search");
            std::vector<std::vector<Vec>> per_anchor;
            for (Cell a : t) {
                std::vector<Vec> deltas;
                for (Cell c : t) deltas.push_back({c.x - a.x, c.y - a.y});
                per_anchor.push_back(std::move(deltas));
            }
            anchors_.push_back(std::move(per_anchor));
            anchor_cells_.push_back(std::vector<Cell>(t.begin(), t.end()));
        }
        start_ = std::chrono::steady_clock::now();
    }

    SearchResult run() {
        SearchResult r;
        try {
            r.status = descend(0) ? SearchStatus::found : SearchStatus::none;
        } catch (const Budget&) {
            r.status = SearchStatus::budget_exhausted;
        }
        r.nodes = nodes_;
        if (r.status == SearchStatus::found) r.placements = chosen_;
        return r;
    }

private:
    struct Budget {};

    std::optional<std::size_t> index(coord_t x, coord_t y) const {
        if (torus_) return static_cast<std::size_t>(wrap(y, region_.height) * region_.width + wrap(x, region_.width));
        if (x < 0 || y < 0 || x >= region_.width || y >= region_.height) return std::nullopt;
        return static_cast<std::size_t>(y * region_.width + x);
    }

    void tick() {
        ++nodes_;
        if (nodes_ > limits_.max_nodes) throw Budget{};
        if ((nodes_ & 4095) == 0 && std::chrono::steady_clock::now() - start_ > limits_.max_time) throw Budget{};
    }

    // Marks the cells of one placement; on conflict (including a tile that
    // wraps onto itself) undoes its own marks and fails.
    bool mark(const std::vector<Vec>& deltas, coord_t x, coord_t y, std::vector<std::size_t>& marked) {
        for (Vec d : deltas) {
            auto i = index(x + d.dx, y + d.dy);
            if (!i || occupied_[*i]) {
                for (auto m : marked) occupied_[m] = 0;
                marked.clear();
                return false;
            }
            occupied_[*i] = 1;
            marked.push_back(*i);
        }
        return true;
    }

    bool descend(std::size_t from) {
        while (from < occupied_.size() && occupied_[from]) ++from;
        if (from == occupied_.size()) return true;
        const coord_t x = static_cast<coord_t>(from) % region_.width;
        const coord_t y = static_cast<coord_t>(from) / region_.width;
        std::vector<std::size_t> marked;
        for (std::size_t t = 0; t < anchors_.size(); ++t)
            for (std::size_t a = 0; a < anchors_[t].size(); ++a) {
                tick();
                if (!mark(anchors_[t][a], x, y, marked)) continue;
                const Cell anchor = anchor_cells_[t][a];
                chosen_.push_back({std::to_string(t), {x - anchor.x + region_.x0, y - anchor.y + region_.y0}});
                if (descend(from + 1)) return true;
                chosen_.pop_back();
                for (auto m : marked) occupied_[m] = 0;
                marked.clear();
            }
        return false;
    }

    Region region_;
    SearchLimits limits_;
    bool torus_;
    std::vector<std::uint8_t> occupied_;
    std::vector<std::vector<std::vector<Vec>>> anchors_;
    std::vector<std::vector<Cell>> anchor_cells_;
    std::vector<Placement> chosen_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::string hat(std::string_view word) {
    std::string out(word.rbegin(), word.rend());
    for (char& c : out) c = complement(c);
    return out;
}

std::optional<BNFactorization> bn_factorize_word(std::string_view word) {
    const std::size_t n = word.size();
    if (n == 0 || n % 2 != 0) return std::nullopt;
    const std::size_t half = n / 2;
    std::string doubled = std::string(word) + std::string(word);
    for (std::size_t r = 0; r < n; ++r) {
        std::string_view w(doubled.data() + r, n);
        const std::string second_half(w.substr(half));
        for (std::size_t la = 0; la <= half; ++la)
            for (std::size_t lb = 0; la + lb <= half; ++lb) {
                const std::size_t lc = half - la - lb;
                BNFactorization f;
                f.rotation = r;
                f.a = w.substr(0, la);
                f.b = w.substr(la, lb);
                f.c = w.substr(la + lb, lc);
                f.a_hat = hat(f.a);
                f.b_hat = hat(f.b);
                f.c_hat = hat(f.c);
                if (f.a_hat + f.b_hat + f.c_hat == second_half) return f;
            }
    }
    return std::nullopt;
}

std::optional<BNFactorization> bn_factorize(const CellSet& tile) { return bn_factorize_word(boundary_word(tile)); }

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

SearchResult exact_tile_search(std::span<const CellSet> tiles, const Region& region, const SearchLimits& limits) {
    if (region.width <= 0 || region.height <= 0) throw std::invalid_argument("search region must have positive area");
    if (limits.max_nodes == 0 || limits.max_time.count() <= 0) throw std::invalid_argument("search budgets must be positive");
    if (tiles.empty()) throw std::invalid_argument("no tiles to search with");
    return Search(tiles, region, limits).run();
}

}  // namespace wangpoly
