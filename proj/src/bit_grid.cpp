#include "choc/bit_grid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace choc {

BitGrid::BitGrid(std::size_t cols, std::size_t rows)
    : cols_(cols),
      rows_(rows),
      words_per_row_((cols + kWordBits - 1) / kWordBits),
      bits_(words_per_row_ * rows, 0) {}

void BitGrid::clear_padding() {
  const std::size_t tail = cols_ % kWordBits;
  if (tail == 0 || words_per_row_ == 0) return;
  const Word mask = (Word{1} << tail) - 1;
  for (std::size_t y = 0; y < rows_; ++y) row(y).back() &= mask;
}

std::size_t BitGrid::count() const {
  return std::accumulate(bits_.begin(), bits_.end(), std::size_t{0},
                         [](std::size_t acc, Word w) { return acc + std::popcount(w); });
}

bool BitGrid::none() const {
  return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
}

}  // namespace choc
