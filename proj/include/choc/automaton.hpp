#pragma once

// Second-order cellular automaton over GF(2):
//
//   a(n+2)[i][j] = a(n+1)[i][j] + a(n+1)[i-1][j] + a(n+1)[i][j-1]
//                + a(n+1)[i-1][j-1] + a(n)[i-1][j-1]          (mod 2)
//
// with a(0) = 0 and a(1) = the single cell (1, 1). The odd cells of a(m) are
// exactly the P-positions of the m x m board.

#include <string>
#include <vector>

#include "choc/bit_grid.hpp"
#include "choc/core_positions.hpp"

namespace choc {

// Largest side ca_pattern accepts; a run costs O(m^3 / 64) word operations.
inline constexpr Side kMaxAutomatonSide = 4096;

// Two consecutive time slices on cells 1..extent in both axes; everything
// outside reads as zero. prev = a(step), curr = a(step + 1).
class CAGrid {
 public:
  // The initial slices a(0), a(1). Throws DomainError for extent < 1.
  explicit CAGrid(Side extent);

  Side extent() const { return extent_; }
  unsigned step() const { return step_; }
  const BitGrid& prev() const { return prev_; }
  const BitGrid& curr() const { return curr_; }

  // 1-based read of curr, zero outside the grid.
  bool odd(Index i, Index j) const;

 private:
  friend CAGrid step_ca(const CAGrid& grid);

  Side extent_;
  unsigned step_ = 0;
  BitGrid prev_;
  BitGrid curr_;
};

// Advances one time step. The support of a(n) lies in [1, n]^2, so the grid
// must satisfy extent >= step + 2; otherwise throws CapacityError.
CAGrid step_ca(const CAGrid& grid);

// Odd cells of a(m), computed with extent m. Throws DomainError for m < 1 and
// CapacityError for m > kMaxAutomatonSide.
Pattern ca_pattern(Side m);

// Every slice a(1)..a(m) as plain PBM frames, for tracing a run.
std::vector<std::string> ca_trace_pbm(Side m);

}  // namespace choc
