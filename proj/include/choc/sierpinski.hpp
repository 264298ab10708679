#pragma once

// Exact Sierpinski octahedra and their horizontal sections.
//
// Order 0 is the solid |x| + |y| + |z| <= 1. One subdivision replaces an
// octahedron of L1-radius r by the six octahedra of radius r/2 centered halfway
// between its center and each of its six vertices. Every coordinate is a
// dyadic rational, stored as an integer numerator over an explicit power of
// two.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "choc/core_positions.hpp"

namespace choc {

using Rational = boost::rational<std::int64_t>;

// Largest order accepted by build() and section().
inline constexpr unsigned kMaxOrder = 10;

// Center numerators over 2^order; the L1-radius is 1 / 2^order.
struct Octa {
  std::int64_t cx = 0;
  std::int64_t cy = 0;
  std::int64_t cz = 0;
  unsigned order = 0;

  bool operator==(const Octa&) const = default;
};

// The six half-radius children.
std::array<Octa, 6> subdivide(const Octa& o);

// All 6^n octahedra of order n. Throws CapacityError for n > bound.
std::vector<Octa> build(unsigned n, unsigned bound = kMaxOrder);

// Planar slice of one octahedron: |x - cx| + |y - cy| <= r. Numerators over the
// owning Section's den.
struct Diamond {
  std::int64_t cx = 0;
  std::int64_t cy = 0;
  std::int64_t r = 0;

  auto operator<=>(const Diamond&) const = default;
};

// S_n intersected with the plane z = 1 - level_num / level_den.
struct Section {
  unsigned order = 0;
  std::int64_t level_num = 0;
  std::int64_t level_den = 1;
  std::int64_t den = 1;  // always 2^(order+1)
  std::vector<Diamond> diamonds;  // sorted

  bool operator==(const Section&) const = default;
};

// level_den must be 2^n (integer level m) or 2^(n+1) (level m + 1/2), and
// 0 < level < 2. Octahedra touching the plane in a single point are left out.
// Throws DomainError for a bad level and CapacityError for n > kMaxOrder.
Section section(unsigned n, std::int64_t level_num, std::int64_t level_den);

// section(n, m, 2^n).
Section integer_section(unsigned n, std::int64_t m);

// section(n, 2m + 1, 2^(n+1)): the plane halfway between levels m and m+1.
Section half_section(unsigned n, std::int64_t m);

// p -> scale * (linear * p) + (tx, ty). linear is one of the eight matrices
// D * [[1, -1], [1, 1]] with D a signed permutation matrix, i.e. a 45 degree
// rotation (times sqrt 2) composed with a symmetry of the square.
struct SimilarityMap {
  std::array<int, 4> linear{};  // row-major
  Rational scale;
  Rational tx;
  Rational ty;

  std::pair<Rational, Rational> apply(Rational x, Rational y) const;
};

struct SimilarityResult {
  std::optional<SimilarityMap> map;
  std::string reason;  // empty on success
  std::optional<std::pair<Rational, Rational>> counterexample;

  explicit operator bool() const { return map.has_value(); }
};

// Searches the eight candidate linear parts for a similarity carrying the
// diamond centers bijectively onto the cell centers (i - 1/2, j - 1/2), with
// every diamond landing exactly on a unit square. Scale and translation come
// from the bounding boxes; the fit is then verified on every center.
SimilarityResult fit_similarity(const Section& sec, const Pattern& pat);

// True iff a equals factor * b up to a translation, radii included.
bool congruent_up_to_translation(const Section& a, const Section& b, Rational factor);

// The level-j slice at the scale of order n, valid for 0 < j < 2^(n+1): the
// order n+1 section at level j, dilated by 2 about the origin. For j <= 2^n it
// is a translate of integer_section(n, j).
Section level_figure(unsigned n, std::int64_t j);

// The section halfway between levels m and m+1 is congruent to the level
// 2m+1 figure at half scale. Compares half_section(n, m) with
// level_figure(n, 2m + 1) / 2. Requires 1 <= m < 2^n; false otherwise.
bool check_half_congruence(unsigned n, std::int64_t m);

// Each diamond of integer_section(n, m) splits into the four diamonds of
// integer_section(n + 1, 2m): centers offset by r/2 along each axis, radius
// r/2. The two sections cover the same region of the same plane.
bool check_refinement(unsigned n, std::int64_t m);

}  // namespace choc
