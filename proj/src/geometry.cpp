#include "wangpoly/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <unordered_map>

namespace wangpoly {

namespace {

coord_t floor_mod(coord_t a, coord_t m) {
    coord_t r = a % m;
    return r < 0 ? r + m : r;
}

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        auto h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(p.y) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

enum Dir : std::uint8_t { kRight = 0, kUp = 1, kLeft = 2, kDown = 3 };
constexpr char kDirChar[] = {'R', 'U', 'L', 'D'};
constexpr coord_t kDirDx[] = {1, 0, -1, 0};
constexpr coord_t kDirDy[] = {0, 1, 0, -1};

struct Edge {
    Point from;
    Dir dir;
};

struct EdgeGraph {
    std::vector<Edge> edges;
    std::unordered_map<Point, std::vector<std::size_t>, PointHash> outgoing;
};

EdgeGraph boundary_edges(const CellSet& cs) {
    EdgeGraph g;
    for (Cell c : cs) {
        if (!cs.contains({c.x, c.y - 1})) g.edges.push_back({{c.x, c.y}, kRight});
        if (!cs.contains({c.x + 1, c.y})) g.edges.push_back({{c.x + 1, c.y}, kUp});
        if (!cs.contains({c.x, c.y + 1})) g.edges.push_back({{c.x + 1, c.y + 1}, kLeft});
        if (!cs.contains({c.x - 1, c.y})) g.edges.push_back({{c.x, c.y + 1}, kDown});
    }
    g.outgoing.reserve(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) g.outgoing[g.edges[i].from].push_back(i);
    return g;
}

// Successor of each boundary edge. At pinch vertices the left turn wins,
// which keeps diagonally touching cells apart; the map is a permutation.
std::size_t next_edge(const EdgeGraph& g, std::size_t cur) {
    const Edge& e = g.edges[cur];
    Point to{e.from.x + kDirDx[e.dir], e.from.y + kDirDy[e.dir]};
    auto it = g.outgoing.find(to);
    if (it == g.outgoing.end()) throw GeometryError("open boundary");
    std::size_t best = it->second.front();
    int best_rank = 4;
    for (std::size_t cand : it->second) {
        int turn = (g.edges[cand].dir - e.dir + 4) % 4;
        int rank = turn == 1 ? 0 : turn == 0 ? 1 : 2;
        if (rank < best_rank) {
            best_rank = rank;
            best = cand;
        }
    }
    return best;
}

std::vector<std::size_t> trace_loop(const EdgeGraph& g, std::size_t start, std::vector<bool>& used) {
    std::vector<std::size_t> loop;
    std::size_t cur = start;
    do {
        if (used[cur]) throw GeometryError("boundary edges do not form cycles");
        used[cur] = true;
        loop.push_back(cur);
        cur = next_edge(g, cur);
    } while (cur != start);
    return loop;
}

}  // namespace

CellSet::CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

CellSet CellSet::from_sorted(std::vector<Cell> cells) {
    CellSet out;
    out.cells_ = std::move(cells);
    return out;
}

CellSet CellSet::rectangle(coord_t x0, coord_t y0, coord_t width, coord_t height) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(std::max<coord_t>(0, width) * std::max<coord_t>(0, height)));
    for (coord_t y = y0; y < y0 + height; ++y)
        for (coord_t x = x0; x < x0 + width; ++x) out.push_back({x, y});
    return from_sorted(std::move(out));
}

bool CellSet::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

std::optional<Box> CellSet::bounds() const {
    if (cells_.empty()) return std::nullopt;
    Box b{cells_.front().x, cells_.front().y, cells_.front().x + 1, cells_.back().y + 1};
    for (Cell c : cells_) {
        b.x0 = std::min(b.x0, c.x);
        b.x1 = std::max(b.x1, c.x + 1);
    }
    return b;
}

CellSet operator|(const CellSet& a, const CellSet& b) {
    std::vector<Cell> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return CellSet::from_sorted(std::move(out));
}

CellSet operator&(const CellSet& a, const CellSet& b) {
    std::vector<Cell> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return CellSet::from_sorted(std::move(out));
}

CellSet operator-(const CellSet& a, const CellSet& b) {
    std::vector<Cell> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return CellSet::from_sorted(std::move(out));
}

bool intersects(const CellSet& a, const CellSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return true;
    }
    return false;
}

CellSet translate(const CellSet& cs, Vec v) {
    std::vector<Cell> out;
    out.reserve(cs.size());
    for (Cell c : cs) {
        Cell t;
        if (__builtin_add_overflow(c.x, v.dx, &t.x) || __builtin_add_overflow(c.y, v.dy, &t.y))
            throw GeometryError("coordinate overflow in translate");
        out.push_back(t);
    }
    return CellSet::from_sorted(std::move(out));
}

CellSet rotate180(const CellSet& cs) {
    std::vector<Cell> out;
    out.reserve(cs.size());
    for (auto it = cs.cells().rbegin(); it != cs.cells().rend(); ++it) out.push_back({-it->x - 1, -it->y - 1});
    return CellSet::from_sorted(std::move(out));
}

CellSet normalized(const CellSet& cs) {
    auto b = cs.bounds();
    if (!b) return cs;
    return translate(cs, {-b->x0, -b->y0});
}

std::optional<Vec> translation_between(const CellSet& from, const CellSet& to) {
    if (from.size() != to.size()) return std::nullopt;
    if (from.empty()) return Vec{};
    // Row-major order is translation invariant, so the cells pair up in order.
    Vec v{to.cells()[0].x - from.cells()[0].x, to.cells()[0].y - from.cells()[0].y};
    for (std::size_t i = 0; i < from.size(); ++i) {
        const Cell& a = from.cells()[i];
        const Cell& b = to.cells()[i];
        if (b.x - a.x != v.dx || b.y - a.y != v.dy) return std::nullopt;
    }
    return v;
}

bool equal_up_to_translation(const CellSet& a, const CellSet& b) { return translation_between(a, b).has_value(); }

std::vector<CellSet> components(const CellSet& cs) {
    const auto cells = cs.cells();
    std::vector<int> label(cells.size(), -1);
    auto index_of = [&](Cell c) -> std::ptrdiff_t {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        if (it == cells.end() || *it != c) return -1;
        return it - cells.begin();
    };
    std::vector<std::vector<Cell>> parts;
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < cells.size(); ++s) {
        if (label[s] >= 0) continue;
        const int id = static_cast<int>(parts.size());
        parts.emplace_back();
        label[s] = id;
        queue.push_back(s);
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            parts.back().push_back(cells[i]);
            const Cell c = cells[i];
            for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
                auto j = index_of(n);
                if (j >= 0 && label[static_cast<std::size_t>(j)] < 0) {
                    label[static_cast<std::size_t>(j)] = id;
                    queue.push_back(static_cast<std::size_t>(j));
                }
            }
        }
    }
    std::vector<CellSet> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.emplace_back(std::move(p));
    return out;
}

bool is_connected(const CellSet& cs) { return cs.empty() || components(cs).size() == 1; }

Region parse_region(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw GeometryError("region literal needs kind:WxH");
    auto kind = text.substr(0, colon);
    auto dims = text.substr(colon + 1);
    auto x = dims.find('x');
    if (x == std::string_view::npos) throw GeometryError("region literal needs kind:WxH");
    auto parse_dim = [](std::string_view s) {
        coord_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
            throw GeometryError("bad region dimension '" + std::string(s) + "'");
        return v;
    };
    Region r;
    if (kind == "box") r.kind = RegionKind::box;
    else if (kind == "torus") r.kind = RegionKind::torus;
    else throw GeometryError("unknown region kind '" + std::string(kind) + "'");
    r.width = parse_dim(dims.substr(0, x));
    r.height = parse_dim(dims.substr(x + 1));
    return r;
}

std::string format_region(const Region& region) {
    return std::string(region.kind == RegionKind::box ? "box:" : "torus:") + std::to_string(region.width) + "x" +
           std::to_string(region.height);
}

PartitionReport verify_partition(const Region& region, std::span<const Placement> placements, const TileMap& tiles) {
    if (region.width < 1 || region.height < 1) throw GeometryError("region must be at least 1x1");
    const auto w = static_cast<std::size_t>(region.width);
    const auto h = static_cast<std::size_t>(region.height);
    std::vector<std::uint8_t> count(w * h, 0);
    std::vector<Cell> outside;

    for (const Placement& pl : placements) {
        auto it = tiles.find(pl.tile);
        if (it == tiles.end()) throw GeometryError("unknown tile '" + pl.tile + "'");
        for (Cell c : it->second) {
            coord_t x = c.x + pl.offset.dx - region.x0;
            coord_t y = c.y + pl.offset.dy - region.y0;
            if (region.kind == RegionKind::torus) {
                x = floor_mod(x, region.width);
                y = floor_mod(y, region.height);
            } else if (x < 0 || y < 0 || x >= region.width || y >= region.height) {
                outside.push_back({x + region.x0, y + region.y0});
                continue;
            }
            auto& k = count[static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)];
            if (k < 2) ++k;
        }
    }

    std::vector<Cell> uncovered, overlaps;
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) {
            auto k = count[y * w + x];
            Cell c{static_cast<coord_t>(x) + region.x0, static_cast<coord_t>(y) + region.y0};
            if (k == 0) uncovered.push_back(c);
            else if (k > 1) overlaps.push_back(c);
        }

    PartitionReport report;
    report.uncovered = CellSet::from_sorted(std::move(uncovered));
    report.overlaps = CellSet::from_sorted(std::move(overlaps));
    report.outside = CellSet(std::move(outside));
    report.ok = report.uncovered.empty() && report.overlaps.empty() && report.outside.empty();
    return report;
}

std::vector<std::vector<Point>> boundary_loops(const CellSet& cs) {
    EdgeGraph g = boundary_edges(cs);
    std::vector<bool> used(g.edges.size(), false);
    std::vector<std::vector<Point>> loops;
    for (std::size_t s = 0; s < g.edges.size(); ++s) {
        if (used[s]) continue;
        std::vector<Point> loop;
        for (std::size_t e : trace_loop(g, s, used)) loop.push_back(g.edges[e].from);
        loops.push_back(std::move(loop));
    }
    return loops;
}

std::string boundary_word(const CellSet& cs) {
    if (cs.empty()) throw GeometryError("boundary word of an empty cell set");
    if (!is_connected(cs)) throw GeometryError("boundary word needs a connected cell set");
    EdgeGraph g = boundary_edges(cs);
    // The least cell's bottom edge starts at the least boundary vertex.
    const Cell first = cs.cells().front();
    std::size_t start = g.edges.size();
    for (std::size_t i : g.outgoing.at(Point{first.x, first.y}))
        if (g.edges[i].dir == kRight) start = i;
    std::vector<bool> used(g.edges.size(), false);
    auto loop = trace_loop(g, start, used);
    if (loop.size() != g.edges.size()) throw GeometryError("boundary word needs a cell set without holes");
    std::string word;
    word.reserve(loop.size());
    for (std::size_t e : loop) word.push_back(kDirChar[g.edges[e].dir]);
    return word;
}

}  // namespace wangpoly
