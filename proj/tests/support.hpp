// Shared helpers for the test programs: outline rasterization, random Wang
// instances that are solvable by construction, and polyomino enumeration.
#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wangpoly/geometry.hpp"
#include "wangpoly/wang.hpp"

namespace support {

using namespace wangpoly;

/// Parses "(x,y)--(x,y)--..." into vertices.
inline std::vector<std::pair<long, long>> parse_path(const char* path) {
    std::vector<std::pair<long, long>> pts;
    std::string s(path);
    std::size_t pos = 0;
    while ((pos = s.find('(', pos)) != std::string::npos) {
        const auto close = s.find(')', pos);
        std::istringstream in(s.substr(pos + 1, close - pos - 1));
        long x = 0, y = 0;
        char comma = 0;
        in >> x >> comma >> y;
        pts.emplace_back(x, y);
        pos = close;
    }
    return pts;
}

/// Cells whose centers lie inside an odd number of the given polygons.
template <std::size_t N>
CellSet rasterize(const char* const (&paths)[N]) {
    std::vector<std::vector<std::pair<long, long>>> polys;
    long x0 = 1L << 30, y0 = 1L << 30, x1 = -(1L << 30), y1 = -(1L << 30);
    for (const char* p : paths) {
        polys.push_back(parse_path(p));
        for (auto [x, y] : polys.back()) {
            x0 = std::min(x0, x), x1 = std::max(x1, x);
            y0 = std::min(y0, y), y1 = std::max(y1, y);
        }
    }
    std::vector<Cell> out;
    for (long y = y0; y < y1; ++y)
        for (long x = x0; x < x1; ++x) {
            // Crossing test at the cell center (x + 1/2, y + 1/2), doubled to stay integral.
            const long cx = 2 * x + 1, cy = 2 * y + 1;
            bool inside = false;
            for (const auto& poly : polys)
                for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
                    const long ax = 2 * poly[i].first, ay = 2 * poly[i].second;
                    const long by = 2 * poly[i + 1].second;
                    if ((ay > cy) == (by > cy)) continue;
                    // Edges are axis-parallel, so a crossing edge is vertical.
                    if (ax > cx) inside = !inside;
                }
            if (inside) out.push_back({x, y});
        }
    return CellSet(std::move(out));
}

struct Instance {
    WangSet ws;
    DiamondTiling tiling;
};

/// Colors every diagonal edge of an R x Q torus at random and reads off the
/// tiles, so the tiling is valid by construction. Tile order is shuffled.
inline std::optional<Instance> random_instance(std::mt19937& rng, int rows, int periods, int colors, int max_tiles) {
    DiamondTiling shape(rows, periods);
    const auto sites = static_cast<std::size_t>(rows * periods);
    std::vector<int> sw(sites), se(sites);
    std::uniform_int_distribution<int> pick(0, colors - 1);
    for (auto& c : sw) c = pick(rng);
    for (auto& c : se) c = pick(rng);
    auto id = [&](Site s) { return static_cast<std::size_t>(s.row * periods + s.period); };

    std::vector<std::array<int, 4>> kinds;
    std::vector<int> which(sites);
    for (int y = 0; y < rows; ++y)
        for (int p = 0; p < periods; ++p) {
            const Site s{y, p};
            std::array<int, 4> t{se[id(shape.upper_left(s))], sw[id(shape.upper_right(s))], sw[id(s)], se[id(s)]};
            auto it = std::find(kinds.begin(), kinds.end(), t);
            if (it == kinds.end()) {
                kinds.push_back(t);
                it = kinds.end() - 1;
            }
            which[id(s)] = static_cast<int>(it - kinds.begin());
        }
    if (static_cast<int>(kinds.size()) > max_tiles) return std::nullopt;

    std::vector<int> perm(kinds.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Instance inst{{}, DiamondTiling(rows, periods)};
    for (int c = 0; c < colors; ++c) inst.ws.colors.push_back("c" + std::to_string(c));
    inst.ws.tiles.resize(kinds.size());
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        const auto& t = kinds[k];
        inst.ws.tiles[static_cast<std::size_t>(perm[k])] = {"w" + std::to_string(perm[k]), t[0], t[1], t[2], t[3]};
    }
    for (int y = 0; y < rows; ++y)
        for (int p = 0; p < periods; ++p) inst.tiling.at(y, p) = perm[static_cast<std::size_t>(which[id({y, p})])];
    return inst;
}

/// All fixed polyominoes with up to `max_size` cells, normalized.
inline std::vector<CellSet> fixed_polyominoes(int max_size) {
    std::vector<CellSet> out;
    std::set<std::vector<std::pair<coord_t, coord_t>>> seen;
    auto key = [](const CellSet& cs) {
        std::vector<std::pair<coord_t, coord_t>> k;
        for (Cell c : cs) k.emplace_back(c.y, c.x);
        return k;
    };
    std::vector<CellSet> frontier{CellSet{{0, 0}}};
    seen.insert(key(frontier[0]));
    out.push_back(frontier[0]);
    for (int size = 2; size <= max_size; ++size) {
        std::vector<CellSet> next;
        for (const auto& p : frontier)
            for (Cell c : p)
                for (Vec d : {Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}}) {
                    const Cell n{c.x + d.dx, c.y + d.dy};
                    if (p.contains(n)) continue;
                    CellSet grown = normalized(p | CellSet{n});
                    if (seen.insert(key(grown)).second) {
                        next.push_back(grown);
                        out.push_back(grown);
                    }
                }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace support
