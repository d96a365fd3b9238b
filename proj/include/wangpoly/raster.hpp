#pragma once

#include <cstdint>
#include <vector>

#include "wangpoly/geometry.hpp"

namespace wangpoly {

/// Dense occupancy bitmap over a fixed window, used to compose cell sets
/// cheaply before converting back to the sorted representation.
class Raster {
public:
    explicit Raster(Box window);

    const Box& window() const { return window_; }
    bool in_window(Cell c) const {
        return c.x >= window_.x0 && c.x < window_.x1 && c.y >= window_.y0 && c.y < window_.y1;
    }
    bool test(Cell c) const { return in_window(c) && bits_[index(c)] != 0; }
    void set(Cell c) { bits_[index(c)] = 1; }
    void clear(Cell c) { bits_[index(c)] = 0; }

    void fill(const Box& box);
    void paint(const CellSet& cs, Vec offset = {});
    void erase(const CellSet& cs, Vec offset = {});
    /// True if any cell of cs + offset is already set.
    bool hits(const CellSet& cs, Vec offset = {}) const;

    CellSet to_cells() const;

private:
    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.y - window_.y0) * static_cast<std::size_t>(window_.width()) +
               static_cast<std::size_t>(c.x - window_.x0);
    }

    Box window_;
    std::vector<std::uint8_t> bits_;
};

}  // namespace wangpoly
