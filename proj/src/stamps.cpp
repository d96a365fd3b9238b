#include "wangpoly/stamps.hpp"

#include <stdexcept>
#include <string>

namespace wangpoly {

namespace {

// Left-segment letter order; the right segment mirrors it (A outermost).
int left_column(Letter l) { return static_cast<int>(l); }
int right_column(Letter l) { return kColumns - 1 - static_cast<int>(l); }

void check_column(int column) {
    if (column < 0 || column >= kColumns || column == 5 || column == 6)
        throw std::invalid_argument("plus stamps live on columns 0-4 and 7-11, got " + std::to_string(column));
}

coord_t plus_x(int column) { return kSquare * column + 3; }

}  // namespace

char letter_char(Letter l) { return "ACLMR"[static_cast<int>(l)]; }
char mid_char(Mid m) { return m == Mid::N ? 'N' : 'F'; }
Side opposite(Side s) { return s == Side::north ? Side::south : Side::north; }

CellSet plus_shape(coord_t a, coord_t b) {
    return CellSet::rectangle(a, b, 1, 5) | CellSet::rectangle(a - 2, b + 2, 5, 1);
}

int position_column(Side side, Letter letter, Role role) {
    const bool near_left = (side == Side::north) == (role == Role::bump);
    return near_left ? left_column(letter) : right_column(letter);
}

CellSet plus_bump(Side side, int column) {
    check_column(column);
    return plus_shape(plus_x(column), side == Side::north ? kBlockHeight : -5);
}

CellSet plus_dent(Side side, int column) {
    check_column(column);
    return plus_shape(plus_x(column), side == Side::north ? kBlockHeight - 5 : 0);
}

CellSet handle_bump(Side side) {
    if (side == Side::north) return CellSet::rectangle(38, 14, 1, 7) | CellSet::rectangle(38, 20, 4, 1);
    return CellSet::rectangle(45, -7, 1, 7) | CellSet::rectangle(42, -7, 4, 1);
}

CellSet mid_bump(Side side, Mid mid) {
    if (side == Side::north) return mid == Mid::N ? plus_shape(42, 16) : plus_shape(41, 21);
    return mid == Mid::N ? plus_shape(41, -7) : plus_shape(42, -12);
}

CellSet handle_dent_void(Side side) {
    const Side mate = opposite(side);
    const Vec shift{0, side == Side::north ? kBlockHeight : -kBlockHeight};
    return translate(handle_bump(mate) | mid_bump(mate, Mid::N) | mid_bump(mate, Mid::F), shift);
}

CellSet hole_upper() { return plus_shape(41, 7); }
CellSet hole_lower() { return plus_shape(42, 2); }

CellSet stamp(StampKind kind, Side side, std::optional<int> column) {
    const bool plus = kind == StampKind::plus_bump || kind == StampKind::plus_dent;
    if (plus && !column) throw std::invalid_argument("plus stamps need a column");
    if (!plus && column) throw std::invalid_argument("middle-segment stamps take no column");
    switch (kind) {
        case StampKind::plus_bump: return plus_bump(side, *column);
        case StampKind::plus_dent: return plus_dent(side, *column);
        case StampKind::handle_bump: return handle_bump(side);
        case StampKind::handle_dent: return handle_dent_void(side);
        case StampKind::mid_near: return mid_bump(side, Mid::N);
        case StampKind::mid_far: return mid_bump(side, Mid::F);
    }
    throw std::invalid_argument("unknown stamp kind");
}

}  // namespace wangpoly
