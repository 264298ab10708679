#include "choc/core_positions.hpp"

#include <bit>
#include <string>

#include "choc/errors.hpp"

namespace choc {

namespace {

void check_side(Side m) {
  if (m < 1 || m > kMaxSide) {
    throw DomainError("side " + std::to_string(m) + " outside [1, " +
                      std::to_string(kMaxSide) + "]");
  }
}

}  // namespace

Pattern::Pattern(Side m) : m_(m), grid_(m, m) {}

bool Pattern::contains(Index i, Index j) const {
  if (i < 1 || j < 1 || i > m_ || j > m_) return false;
  return grid_.test(i - 1, j - 1);
}

void Pattern::insert(Index i, Index j) {
  if (i < 1 || j < 1 || i > m_ || j > m_) {
    throw DomainError("cell (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside board of side " + std::to_string(m_));
  }
  grid_.set(i - 1, j - 1);
}

std::vector<Cell> Pattern::cells() const {
  std::vector<Cell> out;
  out.reserve(size());
  for (Index i = 1; i <= m_; ++i) {
    for (Index j = 1; j <= m_; ++j) {
      if (grid_.test(i - 1, j - 1)) out.push_back({i, j});
    }
  }
  return out;
}

void Pattern::blit(const Pattern& src, Index di, Index dj) {
  const Side n = src.side();
  for (Index y = 0; y < n; ++y) {
    auto words = src.grid().row(y);
    for (std::size_t w = 0; w < words.size(); ++w) {
      BitGrid::Word bits = words[w];
      while (bits != 0) {
        const auto x = static_cast<Index>(w * BitGrid::kWordBits + std::countr_zero(bits));
        insert(x + 1 + di, y + 1 + dj);
        bits &= bits - 1;
      }
    }
  }
}

Pattern Pattern::dilate2() const {
  Pattern out(2 * m_);
  for (const Cell c : cells()) {
    out.insert(2 * c.i - 1, 2 * c.j - 1);
    out.insert(2 * c.i, 2 * c.j - 1);
    out.insert(2 * c.i - 1, 2 * c.j);
    out.insert(2 * c.i, 2 * c.j);
  }
  return out;
}

std::uint32_t cell_value(Index i, Index j, Side m, Side n) {
  check_side(m);
  check_side(n);
  if (i < 1 || i > m || j < 1 || j > n) {
    throw DomainError("cell (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside " + std::to_string(m) + "x" + std::to_string(n) + " board");
  }
  return (i - 1) ^ (j - 1) ^ (m - i) ^ (n - j);
}

bool is_p_position(Index i, Index j, Side m) { return cell_value(i, j, m, m) == 0; }

Pattern pattern(Side m) {
  check_side(m);
  if (m > kMaxPatternSide) {
    throw CapacityError("pattern side " + std::to_string(m) + " exceeds " +
                        std::to_string(kMaxPatternSide));
  }
  // A cell is a member iff (i-1)^(m-i) == (j-1)^(m-j). Bucket columns by their
  // half of the nim-sum, then each row only touches its own bucket.
  const std::size_t buckets = std::bit_ceil(static_cast<std::size_t>(m));
  std::vector<std::vector<Index>> columns_by_value(buckets);
  for (Index i = 1; i <= m; ++i) columns_by_value[(i - 1) ^ (m - i)].push_back(i);

  Pattern out(m);
  for (Index j = 1; j <= m; ++j) {
    for (const Index i : columns_by_value[(j - 1) ^ (m - j)]) out.insert(i, j);
  }
  return out;
}

}  // namespace choc
