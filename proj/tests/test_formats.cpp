#include "doctest.h"

#include <random>

#include "choc/core_positions.hpp"
#include "choc/errors.hpp"
#include "choc/formats.hpp"
#include "choc/nim_pass.hpp"
#include "choc/sierpinski.hpp"

using namespace choc;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("pbm of the 3x3 pattern") {
  CHECK(to_pbm(pattern(3)) == "P1\n3 3\n1 0 1\n0 1 0\n1 0 1\n");
  CHECK(to_pbm(pattern(1)) == "P1\n1 1\n1\n");
}

TEST_CASE("pbm row order puts j = m on top") {
  Pattern p(3);
  p.insert(1, 3);
  CHECK(to_pbm(p) == "P1\n3 3\n1 0 0\n0 0 0\n0 0 0\n");
  CHECK(parse_pbm(to_pbm(p)) == p);
}

TEST_CASE("pbm round trip on random patterns") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const Side m = std::uniform_int_distribution<Side>(1, 80)(rng);
    const double density = std::uniform_real_distribution<double>(0, 1)(rng);
    std::bernoulli_distribution bit(density);
    Pattern p(m);
    for (Index i = 1; i <= m; ++i)
      for (Index j = 1; j <= m; ++j)
        if (bit(rng)) p.insert(i, j);
    CHECK(parse_pbm(to_pbm(p)) == p);
  }
}

TEST_CASE("pbm parsing tolerates comments and whitespace") {
  const Pattern p = parse_pbm("P1 # magic\n# size next\n2\t2\n1 1\n\n11 # packed\n");
  CHECK(p == pattern(2));
}

TEST_CASE("pbm parse errors") {
  CHECK_THROWS_AS(parse_pbm(""), ParseError);
  CHECK_THROWS_AS(parse_pbm("P4\n1 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P1\n2 3\n1 1 1 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P1\n2 2\n1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P1\n2 2\n1 1 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P1\n1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P1\nx 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P1\n99999 99999\n"), CapacityError);
}

TEST_CASE("csv of a section") {
  const Section s = integer_section(1, 1);
  CHECK(to_csv(s) == "1,1,2,0,0,2,4\n");
  CHECK(parse_section_csv(to_csv(s)) == s);
}

TEST_CASE("csv round trip on random sections") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned n = std::uniform_int_distribution<unsigned>(0, 6)(rng);
    const bool half = std::bernoulli_distribution(0.5)(rng);
    const std::int64_t top = std::int64_t{1} << n;
    const Section s = half ? half_section(n, std::uniform_int_distribution<std::int64_t>(0, 2 * top - 1)(rng))
                           : integer_section(n, std::uniform_int_distribution<std::int64_t>(1, 2 * top - 1)(rng));
    REQUIRE_FALSE(s.diamonds.empty());
    CHECK(parse_section_csv(to_csv(s)) == s);
  }
}

TEST_CASE("csv parse errors") {
  CHECK_THROWS_AS(parse_section_csv(""), ParseError);
  CHECK_THROWS_AS(parse_section_csv("1,1,2,0,0,2\n"), ParseError);
  CHECK_THROWS_AS(parse_section_csv("1,1,2,0,0,2,4,9\n"), ParseError);
  CHECK_THROWS_AS(parse_section_csv("1,1,2,0,0,2,4\n2,1,2,0,0,2,4\n"), ParseError);
  CHECK_THROWS_AS(parse_section_csv("1,1,2,0,zero,2,4\n"), ParseError);
  CHECK_THROWS_AS(parse_section_csv("1,1,2,0,0,2,5\n"), ParseError);
}

TEST_CASE("svg renderings") {
  const std::string p = to_svg(pattern(11));
  CHECK(p.find("viewBox=\"0 0 11 11\"") != std::string::npos);
  CHECK(occurrences(p, "<rect") == pattern(11).size());

  const Section s = integer_section(4, 11);
  const std::string q = to_svg(s);
  CHECK(q.find("viewBox=\"-1 -1 2 2\"") != std::string::npos);
  CHECK(occurrences(q, "<path") == s.diamonds.size());

  const OverlayPattern o = overlay(14);
  const std::string r = to_svg(o);
  CHECK(occurrences(r, "<rect") == o.blue.size() + o.red.size());
}

TEST_CASE("overlay grid") {
  const OverlayPattern o = overlay(14);
  const std::string grid = to_grid(o);
  CHECK(occurrences(grid, "\n") == 14);
  // Top line is row j = m.
  const std::string top = grid.substr(0, 14);
  for (Index i = 1; i <= 14; ++i) {
    const bool b = o.blue.contains(i, 14);
    const bool r = o.red.contains(i, 14);
    const char want = b && r ? 'X' : b ? 'B' : r ? 'R' : '0';
    CHECK(top[i - 1] == want);
  }
}

TEST_CASE("dot export") {
  const PassGraph g = pass_graph({1, 1, 0, 0});
  const std::string dot = to_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(occurrences(dot, "label=") == g.nodes.size());
  CHECK(occurrences(dot, "->") == g.edges.size());
  CHECK(occurrences(dot, "dashed") == 2);
}

TEST_CASE("dyadic decimals") {
  CHECK(dyadic_to_decimal(1, 4) == "0.25");
  CHECK(dyadic_to_decimal(-3, 8) == "-0.375");
  CHECK(dyadic_to_decimal(4, 2) == "2");
  CHECK(dyadic_to_decimal(0, 16) == "0");
  CHECK(dyadic_to_decimal(-1, 1024) == "-0.0009765625");
  CHECK_THROWS_AS(dyadic_to_decimal(1, 3), DomainError);
  CHECK_THROWS_AS(dyadic_to_decimal(1, 0), DomainError);
}
