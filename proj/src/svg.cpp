#include "wangpoly/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace wangpoly {

namespace {

coord_t wrap(coord_t v, coord_t m) { return ((v % m) + m) % m; }

struct Canvas {
    coord_t x0, y0, x1, y1;  // cell window
    std::string body;

    void path(const CellSet& cells, std::string_view name) {
        if (cells.empty()) return;
        std::string d;
        for (const auto& loop : boundary_loops(cells)) {
            for (std::size_t i = 0; i < loop.size(); ++i) {
                // Only corners are emitted; collinear vertices add nothing.
                const Point& prev = loop[(i + loop.size() - 1) % loop.size()];
                const Point& cur = loop[i];
                const Point& next = loop[(i + 1) % loop.size()];
                const bool straight = (prev.x == cur.x && cur.x == next.x) || (prev.y == cur.y && cur.y == next.y);
                if (straight && i != 0) continue;
                d += (i == 0 ? "M" : "L") + std::to_string((cur.x - x0) * kPixelsPerCell) + " " +
                     std::to_string((y1 - cur.y) * kPixelsPerCell);
            }
            d += "Z";
        }
        body += "<path fill=\"" + tile_color(name) + "\" fill-rule=\"evenodd\" stroke=\"#000\" stroke-width=\"0.5\" d=\"" +
                d + "\"><title>" + std::string(name) + "</title></path>\n";
    }

    std::string finish() const {
        const coord_t w = (x1 - x0) * kPixelsPerCell;
        const coord_t h = (y1 - y0) * kPixelsPerCell;
        return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               std::to_string(w) + "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
               std::to_string(h) + "\">\n" + body + "</svg>\n";
    }
};

}  // namespace

std::string tile_color(std::string_view name) {
    std::uint32_t h = 2166136261u;
    for (unsigned char c : name) {
        h ^= c;
        h *= 16777619u;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", 64 + (h & 0x7F), 64 + ((h >> 8) & 0x7F), 64 + ((h >> 16) & 0x7F));
    return buf;
}

std::string render_placements(const TileMap& tiles, std::span<const Placement> placements, const Region& region) {
    Canvas canvas{region.x0, region.y0, region.x0 + region.width, region.y0 + region.height, {}};
    const bool torus = region.kind == RegionKind::torus;
    for (const auto& p : placements) {
        auto it = tiles.find(p.tile);
        if (it == tiles.end()) throw GeometryError("unknown tile '" + p.tile + "'");
        std::vector<Cell> cells;
        cells.reserve(it->second.size());
        for (Cell c : it->second) {
            Cell r{c.x + p.offset.dx, c.y + p.offset.dy};
            if (torus) r = {region.x0 + wrap(r.x - region.x0, region.width), region.y0 + wrap(r.y - region.y0, region.height)};
            cells.push_back(r);
        }
        canvas.path(CellSet(std::move(cells)), p.tile);
    }
    return canvas.finish();
}

std::string render_tiles(const TileMap& tiles) {
    constexpr coord_t margin = 4;
    coord_t x = margin, top = 0, bottom = 0;
    std::vector<std::pair<std::string, CellSet>> laid;
    for (const auto& [name, cells] : tiles) {
        auto b = cells.bounds();
        if (!b) continue;
        CellSet moved = translate(cells, {x - b->x0, -b->y0});
        top = std::max(top, b->height());
        x += b->width() + margin;
        laid.emplace_back(name, std::move(moved));
    }
    Canvas canvas{0, bottom - margin, x, top + margin, {}};
    for (const auto& [name, cells] : laid) canvas.path(cells, name);
    return canvas.finish();
}

}  // namespace wangpoly
