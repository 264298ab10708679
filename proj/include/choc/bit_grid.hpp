#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace choc {

// Dense 2D bit matrix, rows packed into 64-bit words. Bit x of row y lives in
// word x / 64 at position x % 64. Padding bits past cols() are always zero.
class BitGrid {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitGrid() = default;
  BitGrid(std::size_t cols, std::size_t rows);

  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool test(std::size_t x, std::size_t y) const {
    return (bits_[y * words_per_row_ + x / kWordBits] >> (x % kWordBits)) & 1U;
  }
  void set(std::size_t x, std::size_t y) {
    bits_[y * words_per_row_ + x / kWordBits] |= Word{1} << (x % kWordBits);
  }
  void reset(std::size_t x, std::size_t y) {
    bits_[y * words_per_row_ + x / kWordBits] &= ~(Word{1} << (x % kWordBits));
  }

  std::span<Word> row(std::size_t y) {
    return {bits_.data() + y * words_per_row_, words_per_row_};
  }
  std::span<const Word> row(std::size_t y) const {
    return {bits_.data() + y * words_per_row_, words_per_row_};
  }

  // Zeroes padding bits in the last word of every row.
  void clear_padding();

  std::size_t count() const;
  bool none() const;

  bool operator==(const BitGrid& other) const = default;

 private:
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> bits_;
};

}  // namespace choc
