#pragma once

// Cell values, the nim-sum P-position criterion, and direct generation of the
// P-position set of the square chocolate game.
//
// Coordinate convention used throughout the project: a cell is (i, j), both
// 1-based; i is the column (horizontal axis), j the row (vertical axis,
// increasing upward when rendered).

#include <compare>
#include <cstdint>
#include <vector>

#include "choc/bit_grid.hpp"

namespace choc {

using Side = std::uint32_t;
using Index = std::uint32_t;

// Largest supported board side. All cell-value operands stay below 2^20.
inline constexpr Side kMaxSide = Side{1} << 20;

// Largest side for which a full Pattern bit grid is materialized.
inline constexpr Side kMaxPatternSide = 16384;

struct Cell {
  Index i = 1;
  Index j = 1;

  auto operator<=>(const Cell&) const = default;
};

// The set of P-position cells of an m x m board, stored as an m x m bit grid.
// Bit (i-1, j-1) is set iff (i, j) is a member.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(Side m);

  Side side() const { return m_; }

  bool contains(Index i, Index j) const;
  bool contains(Cell c) const { return contains(c.i, c.j); }
  void insert(Index i, Index j);
  void insert(Cell c) { insert(c.i, c.j); }

  std::size_t size() const { return grid_.count(); }
  bool empty() const { return grid_.none(); }

  // Member cells in lexicographic (i, j) order.
  std::vector<Cell> cells() const;

  // ORs every member of src, translated by (di, dj), into this pattern.
  void blit(const Pattern& src, Index di, Index dj);

  // Each member (i, j) becomes the 2x2 block {2i-1, 2i} x {2j-1, 2j}.
  Pattern dilate2() const;

  const BitGrid& grid() const { return grid_; }
  BitGrid& grid() { return grid_; }

  bool operator==(const Pattern& other) const = default;

 private:
  Side m_ = 0;
  BitGrid grid_;
};

// (i-1) xor (j-1) xor (m-i) xor (n-j). Throws DomainError when the cell is out
// of bounds or a side is outside [1, kMaxSide].
std::uint32_t cell_value(Index i, Index j, Side m, Side n);

// True iff cell_value(i, j, m, m) == 0.
bool is_p_position(Index i, Index j, Side m);

// All P-positions of the m x m board. Throws DomainError for m < 1 and
// CapacityError for m > kMaxPatternSide.
Pattern pattern(Side m);

}  // namespace choc
