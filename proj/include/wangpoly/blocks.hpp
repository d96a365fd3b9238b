#pragma once

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wangpoly/geometry.hpp"
#include "wangpoly/stamps.hpp"

namespace wangpoly {

class LabelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Subset of {A, C, L, M, R}.
class LetterSet {
public:
    constexpr LetterSet() = default;
    constexpr LetterSet(std::initializer_list<Letter> letters) {
        for (Letter l : letters) insert(l);
    }
    static constexpr LetterSet from_bits(std::uint8_t bits) {
        LetterSet s;
        s.bits_ = bits & 0x1F;
        return s;
    }

    constexpr bool contains(Letter l) const { return bits_ & bit(l); }
    constexpr void insert(Letter l) { bits_ |= bit(l); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return __builtin_popcount(bits_); }
    constexpr bool subset_of(LetterSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr std::uint8_t bits() const { return bits_; }

    friend constexpr bool operator==(LetterSet, LetterSet) = default;
    friend constexpr auto operator<=>(LetterSet, LetterSet) = default;

private:
    static constexpr std::uint8_t bit(Letter l) { return static_cast<std::uint8_t>(1u << static_cast<int>(l)); }
    std::uint8_t bits_ = 0;
};

/// One side of a building block: `{bumps|mid|dents}`.
struct SideLabel {
    LetterSet bumps;
    std::optional<Mid> mid;
    LetterSet dents;

    friend bool operator==(const SideLabel&, const SideLabel&) = default;
    friend auto operator<=>(const SideLabel&, const SideLabel&) = default;
};

/// An absent side is a flat edge without a handle.
struct BlockSpec {
    std::optional<SideLabel> north;
    std::optional<SideLabel> south;

    friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
    friend auto operator<=>(const BlockSpec&, const BlockSpec&) = default;
};

SideLabel parse_label(std::string_view text);
std::string format_label(const SideLabel& label);

/// Cells of one building block in its local frame.
CellSet build_block(const BlockSpec& spec);

/// Non-overlap condition for stacking a block with south label `upper_south`
/// directly on a block with north label `lower_north`.
bool stackable(const SideLabel& upper_south, const SideLabel& lower_north);

struct StackResidual {
    bool overlap = false;
    /// Anchors (a, b) of residual PLUS(a, b) voids, in the lower block's frame.
    std::vector<Cell> holes;
    /// Residual void components that are not a plus shape.
    std::vector<CellSet> irregular;
};

/// Geometric outcome of placing `upper` at (0, 14) on `lower` at (0, 0).
/// Residual voids are taken from the facing sides' dents and dented handles.
StackResidual stack_residual(const BlockSpec& upper, const BlockSpec& lower);

/// Blocks side by side, block j translated by (84 j, 0).
CellSet build_row(std::span<const BlockSpec> specs);

/// `block <north-label-or-"-"> <south-label-or-"-">` lines; `#` comments.
std::vector<BlockSpec> parse_block_specs(std::string_view text);
std::string format_block_specs(std::span<const BlockSpec> specs);

}  // namespace wangpoly
