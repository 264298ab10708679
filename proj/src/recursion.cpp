#include "choc/recursion.hpp"

#include <bit>
#include <map>
#include <string>

#include "choc/errors.hpp"

namespace choc {

Decomposition decompose(Side m) {
  if (m < 2) throw DomainError("decompose needs m >= 2, got " + std::to_string(m));
  const Side top = std::bit_floor(m);
  Decomposition d;
  d.m = m;
  d.k = static_cast<unsigned>(std::countr_zero(top)) - 1;
  d.s = m - top;
  d.t = top - d.s;
  return d;
}

namespace {

class RecursiveBuilder {
 public:
  explicit RecursiveBuilder(RecursionOptions options) : options_(options) {}

  const Pattern& build(Side m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    Pattern out = compose(m);
    return memo_.emplace(m, std::move(out)).first->second;
  }

 private:
  Pattern compose(Side m) {
    if (m == 1) {
      Pattern p(1);
      p.insert(1, 1);
      return p;
    }
    if (m == 2) {
      Pattern p(2);
      for (Index i = 1; i <= 2; ++i)
        for (Index j = 1; j <= 2; ++j) p.insert(i, j);
      return p;
    }
    const Decomposition d = decompose(m);
    if (d.s == 0 || (options_.even_shortcut && m % 2 == 0)) return build(m / 2).dilate2();

    Pattern out(m);
    const Pattern& corner = build(d.s);
    const Index far = m - d.s;
    out.blit(corner, 0, 0);
    out.blit(corner, far, 0);
    out.blit(corner, 0, far);
    out.blit(corner, far, far);
    out.blit(build(d.t), d.s, d.s);
    return out;
  }

  RecursionOptions options_;
  std::map<Side, Pattern> memo_;
};

}  // namespace

Pattern pattern_recursive(Side m, RecursionOptions options) {
  if (m < 1) throw DomainError("pattern side must be >= 1");
  if (m > kMaxPatternSide) {
    throw CapacityError("pattern side " + std::to_string(m) + " exceeds " +
                        std::to_string(kMaxPatternSide));
  }
  RecursiveBuilder builder(options);
  return builder.build(m);
}

bool verify_offdiagonal_empty(Side m) {
  const Decomposition d = decompose(m);
  if (d.s == 0) return true;
  const Pattern p = pattern(m);
  const Side band_end = d.s + d.t;
  auto central = [&](Index x) { return x > d.s && x <= band_end; };
  for (const Cell c : p.cells()) {
    if (central(c.i) != central(c.j)) return false;
  }
  return true;
}

}  // namespace choc
