#include "choc/sierpinski.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>

#include "choc/errors.hpp"

namespace choc {

namespace {

constexpr std::array<std::array<std::int64_t, 3>, 6> kVertexDirs{{
    {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
}};

void check_order(unsigned n, unsigned bound) {
  if (n > bound) {
    throw CapacityError("order " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
}

void collect(const Octa& o, unsigned n, std::vector<Octa>& out) {
  if (o.order == n) {
    out.push_back(o);
    return;
  }
  for (const Octa& child : subdivide(o)) collect(child, n, out);
}

struct Slicer {
  unsigned n;
  std::int64_t z0;  // over 2^(n+1)
  std::vector<Diamond>& out;

  void visit(std::int64_t cx, std::int64_t cy, std::int64_t cz, unsigned order) const {
    const unsigned shift = n + 1 - order;
    const std::int64_t radius = std::int64_t{1} << shift;
    const std::int64_t gap = std::abs(z0 - (cz << shift));
    // Children lie inside the parent, so a plane that misses the parent's
    // interior can only touch them in points.
    if (gap >= radius) return;
    if (order == n) {
      out.push_back({cx << shift, cy << shift, radius - gap});
      return;
    }
    for (const auto& d : kVertexDirs) visit(2 * cx + d[0], 2 * cy + d[1], 2 * cz + d[2], order + 1);
  }
};

using Point = std::pair<Rational, Rational>;

struct Box {
  Rational min_x, max_x, min_y, max_y;
};

template <typename Points>
Box bounding_box(const Points& pts) {
  Box b{pts.front().first, pts.front().first, pts.front().second, pts.front().second};
  for (const auto& [x, y] : pts) {
    b.min_x = std::min(b.min_x, x);
    b.max_x = std::max(b.max_x, x);
    b.min_y = std::min(b.min_y, y);
    b.max_y = std::max(b.max_y, y);
  }
  return b;
}

std::array<std::array<int, 4>, 8> candidate_linear_parts() {
  // Signed permutation matrices D, then D * [[1, -1], [1, 1]].
  const std::array<std::array<int, 4>, 8> dihedral{{
      {1, 0, 0, 1}, {-1, 0, 0, 1}, {1, 0, 0, -1}, {-1, 0, 0, -1},
      {0, 1, 1, 0}, {0, -1, 1, 0}, {0, 1, -1, 0}, {0, -1, -1, 0},
  }};
  std::array<std::array<int, 4>, 8> out{};
  for (std::size_t k = 0; k < 8; ++k) {
    const auto& d = dihedral[k];
    out[k] = {d[0] + d[1], -d[0] + d[1], d[2] + d[3], -d[2] + d[3]};
  }
  return out;
}

using Triple = std::tuple<Rational, Rational, Rational>;

std::vector<Triple> normalized(const Section& s, Rational factor) {
  std::vector<Triple> pts;
  pts.reserve(s.diamonds.size());
  for (const Diamond& d : s.diamonds) {
    pts.emplace_back(factor * Rational(d.cx, s.den), factor * Rational(d.cy, s.den),
                     factor * Rational(d.r, s.den));
  }
  if (pts.empty()) return pts;
  Rational min_x = std::get<0>(pts.front());
  Rational min_y = std::get<1>(pts.front());
  for (const auto& p : pts) {
    min_x = std::min(min_x, std::get<0>(p));
    min_y = std::min(min_y, std::get<1>(p));
  }
  for (auto& p : pts) {
    std::get<0>(p) -= min_x;
    std::get<1>(p) -= min_y;
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

std::array<Octa, 6> subdivide(const Octa& o) {
  std::array<Octa, 6> children;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto& d = kVertexDirs[k];
    children[k] = {2 * o.cx + d[0], 2 * o.cy + d[1], 2 * o.cz + d[2], o.order + 1};
  }
  return children;
}

std::vector<Octa> build(unsigned n, unsigned bound) {
  check_order(n, bound);
  std::vector<Octa> out;
  std::size_t total = 1;
  for (unsigned k = 0; k < n; ++k) total *= 6;
  out.reserve(total);
  collect(Octa{}, n, out);
  return out;
}

Section section(unsigned n, std::int64_t level_num, std::int64_t level_den) {
  check_order(n, kMaxOrder);
  const std::int64_t coarse = std::int64_t{1} << n;
  const std::int64_t fine = coarse << 1;
  if (level_den != coarse && level_den != fine) {
    throw DomainError("level denominator " + std::to_string(level_den) + " must be 2^" +
                      std::to_string(n) + " or 2^" + std::to_string(n + 1));
  }
  if (level_num <= 0 || level_num >= 2 * level_den) {
    throw DomainError("level " + std::to_string(level_num) + "/" + std::to_string(level_den) +
                      " outside (0, 2)");
  }
  Section sec;
  sec.order = n;
  sec.level_num = level_num;
  sec.level_den = level_den;
  sec.den = fine;
  const std::int64_t z0 = fine - level_num * (fine / level_den);
  Slicer{n, z0, sec.diamonds}.visit(0, 0, 0, 0);
  std::sort(sec.diamonds.begin(), sec.diamonds.end());
  return sec;
}

Section integer_section(unsigned n, std::int64_t m) {
  check_order(n, kMaxOrder);
  return section(n, m, std::int64_t{1} << n);
}

Section half_section(unsigned n, std::int64_t m) {
  check_order(n, kMaxOrder);
  return section(n, 2 * m + 1, std::int64_t{2} << n);
}

std::pair<Rational, Rational> SimilarityMap::apply(Rational x, Rational y) const {
  return {scale * (linear[0] * x + linear[1] * y) + tx,
          scale * (linear[2] * x + linear[3] * y) + ty};
}

SimilarityResult fit_similarity(const Section& sec, const Pattern& pat) {
  SimilarityResult result;
  const std::vector<Cell> cells = pat.cells();
  if (sec.diamonds.size() != cells.size()) {
    result.reason = "section has " + std::to_string(sec.diamonds.size()) +
                    " diamonds but pattern has " + std::to_string(cells.size()) + " cells";
    return result;
  }
  if (cells.empty()) {
    result.reason = "empty section and pattern";
    return result;
  }
  const std::int64_t radius = sec.diamonds.front().r;
  for (const Diamond& d : sec.diamonds) {
    if (d.r != radius) {
      result.reason = "diamonds of unequal radius";
      return result;
    }
  }

  std::vector<Point> targets;
  targets.reserve(cells.size());
  for (const Cell c : cells) targets.emplace_back(Rational(2 * c.i - 1, 2), Rational(2 * c.j - 1, 2));
  const Box target_box = bounding_box(targets);
  const Rational radius_scale = Rational(sec.den, 2 * radius);

  result.reason = "no candidate linear part matches the bounding boxes";
  for (const auto& linear : candidate_linear_parts()) {
    SimilarityMap map{linear, 0, 0, 0};
    std::vector<Point> images;
    images.reserve(sec.diamonds.size());
    for (const Diamond& d : sec.diamonds) {
      const Rational x(d.cx, sec.den);
      const Rational y(d.cy, sec.den);
      images.emplace_back(linear[0] * x + linear[1] * y, linear[2] * x + linear[3] * y);
    }
    const Box box = bounding_box(images);
    const Rational wx = box.max_x - box.min_x;
    const Rational wy = box.max_y - box.min_y;
    const Rational target_wx = target_box.max_x - target_box.min_x;
    const Rational target_wy = target_box.max_y - target_box.min_y;
    if ((wx.numerator() == 0) != (target_wx.numerator() == 0) ||
        (wy.numerator() == 0) != (target_wy.numerator() == 0)) continue;
    if (wx.numerator() != 0) {
      map.scale = target_wx / wx;
    } else if (wy.numerator() != 0) {
      map.scale = target_wy / wy;
    } else {
      map.scale = radius_scale;
    }
    if (wy.numerator() != 0 && target_wy / wy != map.scale) continue;
    // Diamonds must land on unit squares.
    if (map.scale != radius_scale) continue;
    map.tx = target_box.min_x - map.scale * box.min_x;
    map.ty = target_box.min_y - map.scale * box.min_y;

    bool ok = true;
    for (const Diamond& d : sec.diamonds) {
      const auto [qx, qy] = map.apply(Rational(d.cx, sec.den), Rational(d.cy, sec.den));
      const Rational ci = qx + Rational(1, 2);
      const Rational cj = qy + Rational(1, 2);
      const bool hit = ci.denominator() == 1 && cj.denominator() == 1 && ci.numerator() >= 1 &&
                       cj.numerator() >= 1 &&
                       pat.contains(static_cast<Index>(ci.numerator()),
                                    static_cast<Index>(cj.numerator()));
      if (!hit) {
        if (!result.counterexample) {
          result.counterexample = Point{Rational(d.cx, sec.den), Rational(d.cy, sec.den)};
          result.reason = "diamond center maps outside the pattern";
        }
        ok = false;
        break;
      }
    }
    if (ok) {
      result.map = map;
      result.reason.clear();
      result.counterexample.reset();
      return result;
    }
  }
  return result;
}

bool congruent_up_to_translation(const Section& a, const Section& b, Rational factor) {
  return normalized(a, 1) == normalized(b, factor);
}

Section level_figure(unsigned n, std::int64_t j) {
  check_order(n + 1, kMaxOrder);
  Section fig = section(n + 1, j, std::int64_t{2} << n);
  fig.order = n;
  fig.level_den = std::int64_t{1} << n;
  fig.den /= 2;
  return fig;
}

bool check_half_congruence(unsigned n, std::int64_t m) {
  if (m < 1 || m >= (std::int64_t{1} << n)) return false;
  return congruent_up_to_translation(half_section(n, m), level_figure(n, 2 * m + 1), Rational(1, 2));
}

bool check_refinement(unsigned n, std::int64_t m) {
  const Section coarse = integer_section(n, m);
  const Section fine = integer_section(n + 1, 2 * m);
  std::vector<Diamond> split;
  split.reserve(4 * coarse.diamonds.size());
  for (const Diamond& d : coarse.diamonds) {
    const std::int64_t x = 2 * d.cx;
    const std::int64_t y = 2 * d.cy;
    split.push_back({x + d.r, y, d.r});
    split.push_back({x - d.r, y, d.r});
    split.push_back({x, y + d.r, d.r});
    split.push_back({x, y - d.r, d.r});
  }
  std::sort(split.begin(), split.end());
  return fine.den == 2 * coarse.den && split == fine.diamonds;
}

}  // namespace choc
