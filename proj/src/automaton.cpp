#include "choc/automaton.hpp"

#include <string>

#include "choc/errors.hpp"
#include "choc/formats.hpp"

namespace choc {

namespace {

using Word = BitGrid::Word;

// dst ^= src shifted one column right (bit x of src lands on bit x+1).
void xor_shifted(std::span<Word> dst, std::span<const Word> src) {
  Word carry = 0;
  for (std::size_t w = 0; w < dst.size(); ++w) {
    dst[w] ^= (src[w] << 1) | carry;
    carry = src[w] >> (BitGrid::kWordBits - 1);
  }
}

void xor_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

Pattern to_pattern(const BitGrid& slice, Side m) {
  Pattern out(m);
  for (Index j = 1; j <= m; ++j)
    for (Index i = 1; i <= m; ++i)
      if (slice.test(i - 1, j - 1)) out.insert(i, j);
  return out;
}

}  // namespace

CAGrid::CAGrid(Side extent) : extent_(extent), prev_(extent, extent), curr_(extent, extent) {
  if (extent < 1) throw DomainError("automaton extent must be >= 1");
  curr_.set(0, 0);
}

bool CAGrid::odd(Index i, Index j) const {
  if (i < 1 || j < 1 || i > extent_ || j > extent_) return false;
  return curr_.test(i - 1, j - 1);
}

CAGrid step_ca(const CAGrid& grid) {
  if (grid.extent_ < grid.step_ + 2) {
    throw CapacityError("automaton extent " + std::to_string(grid.extent_) +
                        " too small for step " + std::to_string(grid.step_ + 1));
  }
  CAGrid next = grid;
  next.prev_ = grid.curr_;
  next.step_ = grid.step_ + 1;
  BitGrid& out = next.curr_;
  for (std::size_t y = 0; y < grid.extent_; ++y) {
    auto row = out.row(y);  // already a copy of curr row y
    xor_shifted(row, grid.curr_.row(y));
    if (y > 0) {
      xor_into(row, grid.curr_.row(y - 1));
      xor_shifted(row, grid.curr_.row(y - 1));
      xor_shifted(row, grid.prev_.row(y - 1));
    }
  }
  out.clear_padding();
  return next;
}

Pattern ca_pattern(Side m) {
  if (m < 1) throw DomainError("pattern side must be >= 1");
  if (m > kMaxAutomatonSide) {
    throw CapacityError("automaton side " + std::to_string(m) + " exceeds " +
                        std::to_string(kMaxAutomatonSide));
  }
  CAGrid grid(m);
  for (Side n = 1; n < m; ++n) grid = step_ca(grid);
  return to_pattern(grid.curr(), m);
}

std::vector<std::string> ca_trace_pbm(Side m) {
  if (m < 1) throw DomainError("pattern side must be >= 1");
  if (m > kMaxAutomatonSide) {
    throw CapacityError("automaton side " + std::to_string(m) + " exceeds " +
                        std::to_string(kMaxAutomatonSide));
  }
  std::vector<std::string> frames;
  CAGrid grid(m);
  frames.push_back(to_pbm(to_pattern(grid.curr(), m)));
  for (Side n = 1; n < m; ++n) {
    grid = step_ca(grid);
    frames.push_back(to_pbm(to_pattern(grid.curr(), m)));
  }
  return frames;
}

}  // namespace choc
