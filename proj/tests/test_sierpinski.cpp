#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <set>

#include "choc/core_positions.hpp"
#include "choc/enumeration.hpp"
#include "choc/errors.hpp"
#include "choc/sierpinski.hpp"

using namespace choc;

namespace {

// Oracle: slice every octahedron of build(n) without pruning.
std::vector<Diamond> brute_slice(unsigned n, std::int64_t level_num, std::int64_t level_den) {
  const std::int64_t den = std::int64_t{2} << n;  // coordinates over 2^(n+1)
  const std::int64_t z0 = den - level_num * (den / level_den);
  std::vector<Diamond> out;
  for (const Octa& o : build(n)) {
    const std::int64_t cz = 2 * o.cz;
    const std::int64_t gap = std::abs(z0 - cz);
    if (gap < 2) out.push_back({2 * o.cx, 2 * o.cy, 2 - gap});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Diamonds are L1 balls; open interiors meet iff the L1 distance of the
// centers is below the sum of radii.
bool interiors_disjoint(const Section& s) {
  for (std::size_t a = 0; a < s.diamonds.size(); ++a)
    for (std::size_t b = a + 1; b < s.diamonds.size(); ++b) {
      const Diamond& p = s.diamonds[a];
      const Diamond& q = s.diamonds[b];
      if (std::abs(p.cx - q.cx) + std::abs(p.cy - q.cy) < p.r + q.r) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("octahedron counts") {
  std::size_t expected = 1;
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(build(n).size() == expected);
    expected *= 6;
  }
  CHECK_THROWS_AS(build(3, 2), CapacityError);
}

TEST_CASE("octahedra stay inside the unit octahedron") {
  for (unsigned n = 0; n <= 5; ++n) {
    const std::int64_t scale = std::int64_t{1} << n;
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> centers;
    for (const Octa& o : build(n)) {
      CHECK(o.order == n);
      // |c| + r <= 1 over 2^n: vertices stay inside.
      CHECK(std::abs(o.cx) + std::abs(o.cy) + std::abs(o.cz) + 1 <= scale);
      centers.insert({o.cx, o.cy, o.cz});
    }
    CHECK(centers.size() == build(n).size());
  }
}

TEST_CASE("children and edge length") {
  const auto kids = subdivide(Octa{});
  for (const Octa& k : kids) {
    CHECK(k.order == 1);
    CHECK(std::abs(k.cx) + std::abs(k.cy) + std::abs(k.cz) == 1);
  }
  // Adjacent vertices (r,0,0) and (0,r,0) of an order-n octahedron are sqrt(2)/2^n apart.
  for (unsigned n = 0; n <= 8; ++n) {
    const double r = 1.0 / std::ldexp(1.0, n);
    CHECK(std::hypot(r, r) == doctest::Approx(std::sqrt(2.0) / std::ldexp(1.0, n)));
  }
}

TEST_CASE("single diamond at order 1, level 1") {
  const Section s = integer_section(1, 1);
  CHECK(s.den == 4);
  REQUIRE(s.diamonds.size() == 1);
  CHECK(s.diamonds[0] == Diamond{0, 0, 2});
  CHECK(g(1) == 1);
}

TEST_CASE("pruned slicing matches slicing every octahedron") {
  for (unsigned n = 0; n <= 5; ++n) {
    const std::int64_t top = std::int64_t{1} << n;
    for (std::int64_t m = 1; m < 2 * top; ++m) CHECK(integer_section(n, m).diamonds == brute_slice(n, m, top));
    for (std::int64_t m = 0; m < 2 * top; ++m) {
      CHECK(half_section(n, m).diamonds == brute_slice(n, 2 * m + 1, 2 * top));
    }
  }
}

TEST_CASE("diamond count equals g") {
  for (unsigned n = 0; n <= 6; ++n)
    for (std::int64_t m = 1; m <= (std::int64_t{1} << n); ++m)
      CHECK(Count(integer_section(n, m).diamonds.size()) == g(static_cast<std::uint64_t>(m)));
}

TEST_CASE("section interiors are disjoint") {
  for (unsigned n = 0; n <= 5; ++n)
    for (std::int64_t m = 1; m < (std::int64_t{2} << n); ++m) {
      CHECK(interiors_disjoint(integer_section(n, m)));
      if (m < (std::int64_t{1} << n)) CHECK(interiors_disjoint(half_section(n, m)));
    }
}

TEST_CASE("half sections have radius 1/2^(n+1)") {
  for (unsigned n = 0; n <= 6; ++n)
    for (std::int64_t m = 0; m < (std::int64_t{2} << n); ++m) {
      const Section s = half_section(n, m);
      CHECK(s.den == (std::int64_t{2} << n));
      for (const Diamond& d : s.diamonds) CHECK(d.r == 1);
    }
}

TEST_CASE("similarity to the pattern") {
  const SimilarityResult fit = fit_similarity(integer_section(4, 11), pattern(11));
  REQUIRE(fit);
  CHECK(fit.reason.empty());
  // Every center lands on a member cell center.
  const Section s = integer_section(4, 11);
  std::set<Cell> hit;
  for (const Diamond& d : s.diamonds) {
    const auto [x, y] = fit.map->apply(Rational(d.cx, s.den), Rational(d.cy, s.den));
    const Rational i = x + Rational(1, 2);
    const Rational j = y + Rational(1, 2);
    REQUIRE(i.denominator() == 1);
    REQUIRE(j.denominator() == 1);
    hit.insert({static_cast<Index>(i.numerator()), static_cast<Index>(j.numerator())});
  }
  const auto cells = pattern(11).cells();
  CHECK(hit == std::set<Cell>(cells.begin(), cells.end()));

  for (unsigned n = 0; n <= 7; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      const std::int64_t m = std::int64_t{1} << k;
      CHECK(fit_similarity(integer_section(n, m), pattern(static_cast<Side>(m))));
    }
  for (unsigned n = 0; n <= 6; ++n)
    for (std::int64_t m = 1; m <= (std::int64_t{1} << n); ++m)
      CHECK(fit_similarity(integer_section(n, m), pattern(static_cast<Side>(m))));
}

TEST_CASE("similarity failures carry a reason") {
  const SimilarityResult wrong_count = fit_similarity(integer_section(4, 11), pattern(10));
  CHECK_FALSE(wrong_count);
  CHECK_FALSE(wrong_count.reason.empty());

  // Same count, one cell moved off the diagonal.
  const Section s5 = integer_section(3, 5);
  Pattern other(5);
  for (const Cell c : pattern(5).cells()) other.insert(c.i == 3 && c.j == 3 ? Cell{1, 2} : c);
  REQUIRE(other.size() == pattern(5).size());
  const SimilarityResult bad = fit_similarity(s5, other);
  CHECK_FALSE(bad);
  CHECK_FALSE(bad.reason.empty());
}

TEST_CASE("level figures match integer sections below the middle") {
  for (unsigned n = 0; n <= 6; ++n)
    for (std::int64_t j = 1; j <= (std::int64_t{1} << n); ++j) {
      CHECK(congruent_up_to_translation(level_figure(n, j), integer_section(n, j), 1));
    }
}

TEST_CASE("half-integer congruence") {
  CHECK(check_half_congruence(3, 2));
  CHECK(congruent_up_to_translation(half_section(3, 2), integer_section(3, 5), Rational(1, 2)));
  for (unsigned n = 1; n <= 6; ++n)
    for (std::int64_t m = 1; m < (std::int64_t{1} << n); ++m) CHECK(check_half_congruence(n, m));
  CHECK_FALSE(check_half_congruence(3, 0));
  CHECK_FALSE(check_half_congruence(3, 8));
}

TEST_CASE("same-order comparison holds only while 2m+1 stays below the middle") {
  // half_section(1, 1) has 5 diamonds, integer_section(1, 3) only 1.
  CHECK(half_section(1, 1).diamonds.size() == 5);
  CHECK(integer_section(1, 3).diamonds.size() == 1);
  for (unsigned n = 1; n <= 6; ++n) {
    const std::int64_t top = std::int64_t{1} << n;
    for (std::int64_t m = 1; m < top; ++m) {
      const bool literal =
          congruent_up_to_translation(half_section(n, m), integer_section(n, 2 * m + 1), Rational(1, 2));
      CHECK(literal == (2 * m + 1 <= top));
    }
  }
}

TEST_CASE("refinement") {
  for (unsigned n = 0; n <= 6; ++n)
    for (std::int64_t m = 1; m <= (std::int64_t{1} << n); ++m) CHECK(check_refinement(n, m));
  // g(2m) = 4 g(m): the fine section has four times as many diamonds.
  CHECK(integer_section(4, 22).diamonds.size() == 4 * integer_section(3, 11).diamonds.size());
}

TEST_CASE("section argument checks") {
  CHECK_THROWS_AS(section(3, 4, 4), DomainError);
  CHECK_THROWS_AS(section(3, 0, 8), DomainError);
  CHECK_THROWS_AS(section(3, 16, 8), DomainError);
  CHECK_THROWS_AS(section(3, 33, 16), DomainError);
  CHECK_NOTHROW(section(3, 31, 16));
  CHECK_THROWS_AS(integer_section(kMaxOrder + 1, 1), CapacityError);
  CHECK_THROWS_AS(level_figure(kMaxOrder, 1), CapacityError);
}
