#pragma once

#include <optional>

#include "wangpoly/geometry.hpp"

namespace wangpoly {

// Building-block local frame: the base block is [0, 84) x [0, 14), split into
// 12 x 2 squares of 7 x 7 cells. Columns 0-4 form the left segment, 5-6 the
// middle segment and 7-11 the right segment.
inline constexpr coord_t kBlockWidth = 84;
inline constexpr coord_t kBlockHeight = 14;
inline constexpr coord_t kSquare = 7;
inline constexpr int kColumns = 12;

enum class Side : std::uint8_t { north, south };
enum class Letter : std::uint8_t { A, C, L, M, R };
enum class Mid : std::uint8_t { N, F };
enum class Role : std::uint8_t { bump, dent };

inline constexpr Letter kLetters[] = {Letter::A, Letter::C, Letter::L, Letter::M, Letter::R};

char letter_char(Letter l);
char mid_char(Mid m);
Side opposite(Side s);

/// PLUS(a, b): the 9-cell plus with vertical bar at column a, rows b..b+4, and
/// horizontal bar on row b+2, columns a-2..a+2. The filler is PLUS(0, 0).
CellSet plus_shape(coord_t a, coord_t b);

/// Square column that a lettered position names. Bumps in a label's first
/// part sit on the near segment (left on the north, right on the south); dents
/// in its third part sit on the far segment.
int position_column(Side side, Letter letter, Role role);

CellSet plus_bump(Side side, int column);
/// Cells removed from the base block for a plus dent.
CellSet plus_dent(Side side, int column);
/// L-shaped handle bump of the middle segment (column 5 north, 6 south).
CellSet handle_bump(Side side);
/// Optional plus attached to a side's handle bump, near or far from the body.
CellSet mid_bump(Side side, Mid mid);
/// Cells removed for a side's dented handle: the translate of the opposite
/// side's handle bump and both of its mid plus positions.
CellSet handle_dent_void(Side side);

/// Interior holes shared by both dented handles: hole_upper = PLUS(41, 7),
/// hole_lower = PLUS(42, 2).
CellSet hole_upper();
CellSet hole_lower();

enum class StampKind : std::uint8_t { plus_bump, plus_dent, handle_bump, handle_dent, mid_near, mid_far };

/// Table lookup by kind. Plus stamps need a column; middle-segment stamps
/// must not get one (std::invalid_argument).
CellSet stamp(StampKind kind, Side side, std::optional<int> column = std::nullopt);

}  // namespace wangpoly
