#include "wangpoly/wang.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace wangpoly {

namespace {

std::string at_line(int lineno, const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; }

int intern(std::vector<std::string>& colors, const std::string& tok) {
    auto it = std::find(colors.begin(), colors.end(), tok);
    if (it != colors.end()) return static_cast<int>(it - colors.begin());
    colors.push_back(tok);
    return static_cast<int>(colors.size()) - 1;
}

// One adjacency requirement between two sites, checked when the later of the
// two (row-major) is assigned.
struct Link {
    std::size_t upper;  // the site whose sw/se edge is involved
    std::size_t lower;
    bool via_sw;  // sw(upper) == ne(lower), else se(upper) == nw(lower)
};

class TorusSearch {
public:
    TorusSearch(const WangSet& ws, int rows, int periods) : ws_(ws), tiling_(rows, periods) {
        const auto sites = static_cast<std::size_t>(rows) * static_cast<std::size_t>(periods);
        links_.resize(sites);
        auto index = [&](Site s) { return static_cast<std::size_t>(s.row * periods + s.period); };
        for (int y = 0; y < rows; ++y)
            for (int p = 0; p < periods; ++p) {
                Site s{y, p};
                for (bool via_sw : {true, false}) {
                    Link l{index(s), index(via_sw ? tiling_.lower_left(s) : tiling_.lower_right(s)), via_sw};
                    links_[std::max(l.upper, l.lower)].push_back(l);
                }
            }
    }

    std::optional<DiamondTiling> first() {
        stop_at_first_ = true;
        if (descend(0)) return tiling_;
        return std::nullopt;
    }

    std::uint64_t count() {
        stop_at_first_ = false;
        found_ = 0;
        descend(0);
        return found_;
    }

private:
    int& cell(std::size_t i) {
        return tiling_.at(static_cast<int>(i) / tiling_.periods(), static_cast<int>(i) % tiling_.periods());
    }

    bool consistent(std::size_t i) {
        for (const Link& l : links_[i]) {
            const WangTile& up = ws_.tiles[static_cast<std::size_t>(cell(l.upper))];
            const WangTile& lo = ws_.tiles[static_cast<std::size_t>(cell(l.lower))];
            if (l.via_sw ? up.sw != lo.ne : up.se != lo.nw) return false;
        }
        return true;
    }

    bool descend(std::size_t i) {
        if (i == links_.size()) {
            ++found_;
            return stop_at_first_;
        }
        for (int tile = 0; tile < ws_.n(); ++tile) {
            cell(i) = tile;
            if (consistent(i) && descend(i + 1)) return true;
        }
        return false;
    }

    const WangSet& ws_;
    DiamondTiling tiling_;
    std::vector<std::vector<Link>> links_;
    bool stop_at_first_ = true;
    std::uint64_t found_ = 0;
};

void check_shape(const WangSet& ws, int rows, int periods) {
    if (rows < 2 || rows % 2 != 0) throw WangError("torus rows must be even and positive");
    if (periods < 1) throw WangError("torus periods must be positive");
    if (ws.n() < 1) throw WangError("empty Wang set");
}

}  // namespace

int WangSet::t() const {
    int bits = 0;
    while ((1 << bits) < m()) ++bits;
    return bits;
}

int WangSet::tile_index(std::string_view name) const {
    for (std::size_t i = 0; i < tiles.size(); ++i)
        if (tiles[i].name == name) return static_cast<int>(i);
    return -1;
}

WangSet parse_wang_set(std::string_view text, const WangParseOptions& options) {
    WangSet ws;
    std::vector<StandardTile> standard_tiles;
    bool standard = false;
    bool seen_tile = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "standard") {
            if (seen_tile) throw WangError(at_line(lineno, "'standard' must precede all tiles"));
            standard = true;
            continue;
        }
        if (kw == "colors") {
            std::string tok;
            while (ls >> tok) intern(ws.colors, tok);
            continue;
        }
        if (kw != "tile") throw WangError(at_line(lineno, "unknown directive '" + kw + "'"));
        seen_tile = true;
        std::string name;
        if (!(ls >> name)) throw WangError(at_line(lineno, "tile needs a name"));
        if (ws.tile_index(name) >= 0 ||
            std::any_of(standard_tiles.begin(), standard_tiles.end(), [&](auto& t) { return t.name == name; }))
            throw WangError(at_line(lineno, "duplicate tile name '" + name + "'"));

        const std::array<std::string, 4> keys =
            standard ? std::array<std::string, 4>{"n", "e", "s", "w"} : std::array<std::string, 4>{"nw", "ne", "sw", "se"};
        std::array<int, 4> value{-1, -1, -1, -1};
        std::string field;
        while (ls >> field) {
            auto eq = field.find('=');
            if (eq == std::string::npos || eq + 1 == field.size())
                throw WangError(at_line(lineno, "expected key=color, got '" + field + "'"));
            auto key = field.substr(0, eq);
            auto k = std::find(keys.begin(), keys.end(), key) - keys.begin();
            if (k == 4) throw WangError(at_line(lineno, "unknown edge key '" + key + "'"));
            if (value[static_cast<std::size_t>(k)] >= 0) throw WangError(at_line(lineno, "repeated edge key '" + key + "'"));
            value[static_cast<std::size_t>(k)] = intern(ws.colors, field.substr(eq + 1));
        }
        if (std::count(value.begin(), value.end(), -1) > 0) throw WangError(at_line(lineno, "tile needs all four edges"));
        if (standard) standard_tiles.push_back({name, value[0], value[1], value[2], value[3]});
        else ws.tiles.push_back({name, value[0], value[1], value[2], value[3]});
    }
    if (standard) ws = from_standard(std::move(ws.colors), standard_tiles);
    if (ws.tiles.empty()) throw WangError("Wang set has no tiles");
    if (ws.m() < 2) {
        if (!options.pad_colors) throw WangError("Wang set needs at least two colors (use --pad-colors)");
        std::string pad = "_pad";
        while (std::find(ws.colors.begin(), ws.colors.end(), pad) != ws.colors.end()) pad += "_";
        ws.colors.push_back(pad);
    }
    return ws;
}

std::string format_wang_set(const WangSet& ws) {
    std::string out = "colors";
    for (const auto& c : ws.colors) out += " " + c;
    out += "\n";
    auto col = [&](int i) { return ws.colors.at(static_cast<std::size_t>(i)); };
    for (const auto& t : ws.tiles)
        out += "tile " + t.name + " nw=" + col(t.nw) + " ne=" + col(t.ne) + " sw=" + col(t.sw) + " se=" + col(t.se) + "\n";
    return out;
}

WangSet from_standard(std::vector<std::string> colors, std::span<const StandardTile> tiles) {
    WangSet ws;
    ws.colors = std::move(colors);
    for (const auto& t : tiles) ws.tiles.push_back({t.name, t.west, t.north, t.south, t.east});
    return ws;
}

DiamondTiling::DiamondTiling(int rows, int periods, int fill) : rows_(rows), periods_(periods) {
    if (rows < 2 || rows % 2 != 0) throw WangError("diamond tiling rows must be even and positive");
    if (periods < 1) throw WangError("diamond tiling periods must be positive");
    grid_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(periods), fill);
}

Site DiamondTiling::lower_left(Site s) const {
    if (s.row > 0) return {s.row - 1, s.period};
    return {rows_ - 1, wrap_period(s.period - rows_ / 2)};
}

Site DiamondTiling::lower_right(Site s) const {
    if (s.row > 0) return {s.row - 1, wrap_period(s.period + 1)};
    return {rows_ - 1, wrap_period(s.period + 1 - rows_ / 2)};
}

Site DiamondTiling::upper_right(Site s) const {
    if (s.row < rows_ - 1) return {s.row + 1, s.period};
    return {0, wrap_period(s.period + rows_ / 2)};
}

Site DiamondTiling::upper_left(Site s) const {
    if (s.row < rows_ - 1) return {s.row + 1, wrap_period(s.period - 1)};
    return {0, wrap_period(s.period - 1 + rows_ / 2)};
}

bool check_tiling(const WangSet& ws, const DiamondTiling& tiling) {
    auto tile = [&](Site s) -> const WangTile& {
        int i = tiling.at(s);
        if (i < 0 || i >= ws.n()) throw std::out_of_range("tile index " + std::to_string(i) + " out of range");
        return ws.tiles[static_cast<std::size_t>(i)];
    };
    bool ok = true;
    for (int y = 0; y < tiling.rows(); ++y)
        for (int p = 0; p < tiling.periods(); ++p) {
            Site s{y, p};
            const WangTile& here = tile(s);
            if (here.sw != tile(tiling.lower_left(s)).ne) ok = false;
            if (here.se != tile(tiling.lower_right(s)).nw) ok = false;
        }
    return ok;
}

std::optional<DiamondTiling> solve_torus(const WangSet& ws, int rows, int periods) {
    check_shape(ws, rows, periods);
    return TorusSearch(ws, rows, periods).first();
}

std::uint64_t count_torus(const WangSet& ws, int rows, int periods) {
    check_shape(ws, rows, periods);
    return TorusSearch(ws, rows, periods).count();
}

DiamondTiling parse_tiling(std::string_view text, const WangSet& ws) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::optional<DiamondTiling> tiling;
    int row = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!tiling) {
            int r = 0, q = 0;
            if (first != "tiling" || !(ls >> r >> q)) throw WangError(at_line(lineno, "expected 'tiling <R> <Q>'"));
            try {
                tiling.emplace(r, q);
            } catch (const WangError& e) {
                throw WangError(at_line(lineno, e.what()));
            }
            continue;
        }
        if (row >= tiling->rows()) throw WangError(at_line(lineno, "more rows than declared"));
        std::vector<std::string> names{first};
        std::string tok;
        while (ls >> tok) names.push_back(tok);
        if (static_cast<int>(names.size()) != tiling->periods())
            throw WangError(at_line(lineno, "expected " + std::to_string(tiling->periods()) + " tile names"));
        for (int p = 0; p < tiling->periods(); ++p) {
            int idx = ws.tile_index(names[static_cast<std::size_t>(p)]);
            if (idx < 0) throw WangError(at_line(lineno, "unknown tile '" + names[static_cast<std::size_t>(p)] + "'"));
            tiling->at(row, p) = idx;
        }
        ++row;
    }
    if (!tiling) throw WangError("missing 'tiling <R> <Q>' header");
    if (row != tiling->rows()) throw WangError("expected " + std::to_string(tiling->rows()) + " rows, got " + std::to_string(row));
    return *tiling;
}

std::string format_tiling(const DiamondTiling& tiling, const WangSet& ws) {
    std::string out = "tiling " + std::to_string(tiling.rows()) + " " + std::to_string(tiling.periods()) + "\n";
    for (int y = 0; y < tiling.rows(); ++y) {
        for (int p = 0; p < tiling.periods(); ++p) {
            if (p) out += " ";
            out += ws.tiles.at(static_cast<std::size_t>(tiling.at(y, p))).name;
        }
        out += "\n";
    }
    return out;
}

}  // namespace wangpoly
