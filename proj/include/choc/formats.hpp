#pragma once

// Text serializations: plain PBM patterns, section CSV, SVG renderings, the
// nim-pass overlay grid and DOT game graphs.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "choc/core_positions.hpp"
#include "choc/nim_pass.hpp"
#include "choc/sierpinski.hpp"

namespace choc {

// "P1", "m m", then m rows of m space-separated digits. The top line is row
// j = m, the bottom line row j = 1; column c is i = c; 1 marks a P-position.
std::string to_pbm(const Pattern& p);

// Accepts comments ('#' to end of line) and free whitespace between tokens.
// Throws ParseError on malformed input or a non-square bitmap.
Pattern parse_pbm(std::string_view text);

// One line per diamond: n,level_num,level_den,cx_num,cy_num,r_num,den
std::string to_csv(const Section& sec);

// Throws ParseError on malformed rows or rows that disagree on the header
// fields. An empty input has no level and is rejected.
Section parse_section_csv(std::string_view text);

// viewBox "0 0 m m", one unit square per member, j pointing up.
std::string to_svg(const Pattern& p);

// viewBox "-1 -1 2 2", one diamond path per slice, y pointing up.
std::string to_svg(const Section& sec);

// m lines of m characters, top line is row j = m: '0' neither, 'B' plain Nim
// only, 'R' with-pass only, 'X' both.
std::string to_grid(const OverlayPattern& o);

// Two layers, blue squares under red squares, same frame as to_svg(Pattern).
std::string to_svg(const OverlayPattern& o);

std::string to_dot(const PassGraph& g);

// Exact decimal form of num / den for den a power of two.
std::string dyadic_to_decimal(std::int64_t num, std::int64_t den);

}  // namespace choc
