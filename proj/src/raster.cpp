#include "wangpoly/raster.hpp"

namespace wangpoly {

Raster::Raster(Box window) : window_(window) {
    if (window.width() < 0 || window.height() < 0) throw GeometryError("raster window is inverted");
    bits_.assign(static_cast<std::size_t>(window.width()) * static_cast<std::size_t>(window.height()), 0);
}

void Raster::fill(const Box& box) {
    for (coord_t y = box.y0; y < box.y1; ++y)
        for (coord_t x = box.x0; x < box.x1; ++x) set({x, y});
}

void Raster::paint(const CellSet& cs, Vec offset) {
    for (Cell c : cs) {
        Cell p{c.x + offset.dx, c.y + offset.dy};
        if (!in_window(p)) throw GeometryError("cell outside raster window");
        set(p);
    }
}

void Raster::erase(const CellSet& cs, Vec offset) {
    for (Cell c : cs) {
        Cell p{c.x + offset.dx, c.y + offset.dy};
        if (in_window(p)) clear(p);
    }
}

bool Raster::hits(const CellSet& cs, Vec offset) const {
    for (Cell c : cs)
        if (test({c.x + offset.dx, c.y + offset.dy})) return true;
    return false;
}

CellSet Raster::to_cells() const {
    std::vector<Cell> out;
    std::size_t i = 0;
    for (coord_t y = window_.y0; y < window_.y1; ++y)
        for (coord_t x = window_.x0; x < window_.x1; ++x, ++i)
            if (bits_[i]) out.push_back({x, y});
    return CellSet::from_sorted(std::move(out));
}

}  // namespace wangpoly
