#include "doctest.h"

#include <algorithm>
#include <set>

#include "choc/core_positions.hpp"
#include "choc/errors.hpp"

using namespace choc;

namespace {

// Oracle: the four pile sizes xored inline, no library call.
bool naive_p(unsigned i, unsigned j, unsigned m) {
  return (((i - 1) ^ (j - 1) ^ (m - i) ^ (m - j)) == 0);
}

std::set<Cell> as_set(const Pattern& p) {
  const auto cells = p.cells();
  return {cells.begin(), cells.end()};
}

}  // namespace

TEST_CASE("cell value on the diagonal is zero") {
  for (Side m = 1; m <= 40; ++m)
    for (Index k = 1; k <= m; ++k) CHECK(cell_value(k, k, m, m) == 0);
}

TEST_CASE("cell value of (1,2) on the 3x3 board") {
  CHECK(cell_value(1, 2, 3, 3) == 2);
  CHECK_FALSE(is_p_position(1, 2, 3));
}

TEST_CASE("cell value on rectangular boards") {
  // (i-1)^(j-1)^(m-i)^(n-j) for m=5, n=3
  CHECK(cell_value(2, 1, 5, 3) == (1u ^ 0u ^ 3u ^ 2u));
  CHECK(cell_value(5, 3, 5, 3) == (4u ^ 2u));
}

TEST_CASE("both diagonals are P-positions") {
  for (Side m = 1; m <= 64; ++m) {
    for (Index k = 1; k <= m; ++k) {
      CHECK(is_p_position(k, k, m));
      CHECK(is_p_position(k, m + 1 - k, m));
    }
  }
}

TEST_CASE("every cell of the 2x2 board is P") {
  for (Index i = 1; i <= 2; ++i)
    for (Index j = 1; j <= 2; ++j) CHECK(is_p_position(i, j, 2));
}

TEST_CASE("reflection and transpose symmetry") {
  for (Side m = 1; m <= 48; ++m) {
    for (Index i = 1; i <= m; ++i) {
      for (Index j = 1; j <= m; ++j) {
        const bool v = is_p_position(i, j, m);
        CHECK(v == is_p_position(i, m - j + 1, m));
        CHECK(v == is_p_position(m - i + 1, j, m));
        CHECK(v == is_p_position(j, i, m));
      }
    }
  }
}

TEST_CASE("pattern of small boards") {
  CHECK(pattern(1).cells() == std::vector<Cell>{{1, 1}});
  CHECK(pattern(2).size() == 4);
  const std::set<Cell> three{{1, 1}, {2, 2}, {3, 3}, {1, 3}, {3, 1}};
  CHECK(as_set(pattern(3)) == three);
  CHECK(pattern(3).size() == 5);
}

TEST_CASE("pattern matches the inline nim-sum oracle") {
  for (Side m = 1; m <= 130; ++m) {
    const Pattern p = pattern(m);
    CHECK(p.side() == m);
    std::size_t count = 0;
    for (Index i = 1; i <= m; ++i) {
      for (Index j = 1; j <= m; ++j) {
        const bool want = naive_p(i, j, m);
        count += want;
        if (p.contains(i, j) != want) FAIL("m=" << m << " cell (" << i << "," << j << ")");
      }
    }
    CHECK(p.size() == count);
  }
}

TEST_CASE("cells come out in lexicographic order") {
  const auto cells = pattern(21).cells();
  CHECK(std::is_sorted(cells.begin(), cells.end()));
}

TEST_CASE("domain and capacity errors") {
  CHECK_THROWS_AS(cell_value(0, 1, 3, 3), DomainError);
  CHECK_THROWS_AS(cell_value(4, 1, 3, 3), DomainError);
  CHECK_THROWS_AS(cell_value(1, 1, 0, 3), DomainError);
  CHECK_THROWS_AS(cell_value(1, 1, kMaxSide + 1, 1), DomainError);
  CHECK_NOTHROW(cell_value(kMaxSide, kMaxSide, kMaxSide, kMaxSide));
  CHECK_THROWS_AS(pattern(0), DomainError);
  CHECK_THROWS_AS(pattern(kMaxPatternSide + 1), CapacityError);
}

TEST_CASE("pattern container operations") {
  Pattern p(4);
  CHECK(p.empty());
  p.insert(1, 2);
  p.insert(Cell{4, 4});
  CHECK(p.contains(1, 2));
  CHECK_FALSE(p.contains(2, 1));
  CHECK_FALSE(p.contains(0, 1));
  CHECK_FALSE(p.contains(5, 5));
  CHECK_THROWS_AS(p.insert(5, 1), DomainError);
  CHECK_THROWS_AS(p.insert(1, 0), DomainError);

  const Pattern d = p.dilate2();
  CHECK(d.side() == 8);
  CHECK(d.size() == 8);
  for (Index i : {1u, 2u})
    for (Index j : {3u, 4u}) CHECK(d.contains(i, j));
  CHECK(d.contains(7, 7));
  CHECK(d.contains(8, 8));

  Pattern big(6);
  big.blit(pattern(2), 2, 3);
  CHECK(big.size() == 4);
  CHECK(big.contains(3, 4));
  CHECK(big.contains(4, 5));
  CHECK_FALSE(big.contains(2, 3));
}
