#include "doctest.h"

#include "choc/core_positions.hpp"
#include "choc/errors.hpp"
#include "choc/recursion.hpp"

using namespace choc;

namespace {

// The side x side window of p with lower-left corner after (di, dj).
Pattern window(const Pattern& p, Index di, Index dj, Side side) {
  Pattern out(side);
  for (Index i = 1; i <= side; ++i)
    for (Index j = 1; j <= side; ++j)
      if (p.contains(di + i, dj + j)) out.insert(i, j);
  return out;
}

}  // namespace

TEST_CASE("decomposition of 11 and 6") {
  const Decomposition d11 = decompose(11);
  CHECK(d11.m == 11);
  CHECK(d11.s == 3);
  CHECK(d11.t == 5);
  CHECK(d11.k == 2);
  const Decomposition d6 = decompose(6);
  CHECK(d6.s == 2);
  CHECK(d6.t == 2);
  CHECK(d6.k == 1);
  const Decomposition d8 = decompose(8);
  CHECK(d8.s == 0);
  CHECK(d8.t == 8);
  CHECK_THROWS_AS(decompose(1), DomainError);
  CHECK_THROWS_AS(decompose(0), DomainError);
}

TEST_CASE("decomposition fields for a range of sides") {
  for (Side m = 2; m <= 5000; ++m) {
    const Decomposition d = decompose(m);
    const Side top = Side{1} << (d.k + 1);
    CHECK(top + d.s == m);
    CHECK(d.s < top);
    CHECK(d.t == top - d.s);
    CHECK(2 * d.s + d.t == m);
  }
}

TEST_CASE("pattern of 11 is four copies of 3 around a copy of 5") {
  const Pattern p = pattern_recursive(11);
  const Pattern three = pattern(3);
  CHECK(window(p, 0, 0, 3) == three);
  CHECK(window(p, 8, 0, 3) == three);
  CHECK(window(p, 0, 8, 3) == three);
  CHECK(window(p, 8, 8, 3) == three);
  CHECK(window(p, 3, 3, 5) == pattern(5));
  CHECK(p.size() == 4 * three.size() + pattern(5).size());
}

TEST_CASE("even sides are dilations of the half side") {
  for (Side p = 1; p <= 100; ++p) {
    CHECK(pattern_recursive(2 * p) == pattern_recursive(p).dilate2());
  }
}

TEST_CASE("recursive generator agrees with the nim-sum generator") {
  for (Side m = 1; m <= 300; ++m) {
    const Pattern direct = pattern(m);
    CHECK(pattern_recursive(m) == direct);
    CHECK(pattern_recursive(m, {.even_shortcut = true}) == direct);
  }
  const Side big = 3000;
  CHECK(pattern_recursive(big) == pattern(big));
}

TEST_CASE("powers of two") {
  for (unsigned k = 0; k <= 9; ++k) {
    const Side m = Side{1} << k;
    CHECK(pattern_recursive(m) == pattern(m));
    CHECK(pattern_recursive(m).size() == (std::size_t{1} << (2 * k)));
  }
}

TEST_CASE("off-diagonal bands are empty") {
  CHECK(verify_offdiagonal_empty(11));
  CHECK(verify_offdiagonal_empty(6));
  CHECK(verify_offdiagonal_empty(8));
  for (Side m = 2; m <= 200; ++m) CHECK(verify_offdiagonal_empty(m));
  CHECK_THROWS_AS(verify_offdiagonal_empty(1), DomainError);
}

TEST_CASE("recursive generator errors") {
  CHECK_THROWS_AS(pattern_recursive(0), DomainError);
  CHECK_THROWS_AS(pattern_recursive(kMaxPatternSide + 1), CapacityError);
}
