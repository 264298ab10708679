#pragma once

// Self-similar structure of the P-position pattern: corner/center
// decomposition, doubling, and a recursive generator that never evaluates a
// nim-sum.

#include "choc/core_positions.hpp"

namespace choc {

// m = 2^(k+1) + s with 0 <= s < 2^(k+1), and t = 2^(k+1) - s. The pattern of
// side m is four corner copies of the side-s pattern plus one side-t pattern
// at offset (s, s).
struct Decomposition {
  Side m = 0;
  Side s = 0;
  Side t = 0;
  unsigned k = 0;
};

// Throws DomainError for m < 2.
Decomposition decompose(Side m);

struct RecursionOptions {
  // Build every even side from its half by 2x2 dilation, not only powers of
  // two (which need it: their decomposition has s = 0, t = m).
  bool even_shortcut = false;
};

// Throws DomainError for m < 1 and CapacityError for m > kMaxPatternSide.
Pattern pattern_recursive(Side m, RecursionOptions options = {});

// True iff pattern(m) has no member in the two off-diagonal bands, the cells
// where exactly one coordinate lies in the central band s+1..2^(k+1).
// Vacuously true when s = 0. Throws DomainError for m < 2.
bool verify_offdiagonal_empty(Side m);

}  // namespace choc
