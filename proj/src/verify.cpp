#include "choc/verify.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "choc/automaton.hpp"
#include "choc/core_positions.hpp"
#include "choc/enumeration.hpp"
#include "choc/errors.hpp"
#include "choc/game_engine.hpp"
#include "choc/recursion.hpp"
#include "choc/sierpinski.hpp"

namespace choc {

std::string SuiteReport::summary() const {
  return "suite=" + name + " checked=" + std::to_string(checked) + " failed=" + std::to_string(failed);
}

namespace {

struct SuiteInfo {
  const char* name;
  unsigned default_bound;
  void (*run)(SuiteReport&, unsigned);
};

std::string cell_str(Index i, Index j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool v(Side m, Index i, Index j) { return cell_value(i, j, m, m) != 0; }

void run_nim(SuiteReport& r, unsigned bound) {
  Solver solver(std::max<Side>(bound, 1));
  for (Side m = 1; m <= bound; ++m) {
    for (Index i = 1; i <= m; ++i) {
      for (Index j = 1; j <= m; ++j) {
        const Outcome oracle = solver.solve(make_state(m, m, {i, j}));
        const Outcome expected = is_p_position(i, j, m) ? Outcome::p : Outcome::n;
        r.check(oracle == expected, [&] { return "m=" + std::to_string(m) + " cell " + cell_str(i, j); });
      }
    }
  }
}

void run_doubling(SuiteReport& r, unsigned bound) {
  for (Side m = 1; m <= bound; ++m) {
    const std::string tag = "m=" + std::to_string(m) + " ";
    for (Index i = 1; i <= m; ++i) {
      for (Index j = 1; j <= m; ++j) {
        const bool base = v(m, i, j);
        r.check(v(2 * m, 2 * i, 2 * j) == base, [&] { return tag + "v_2m(2i,2j) at " + cell_str(i, j); });
        r.check(v(2 * m, 2 * i - 1, 2 * j) == base, [&] { return tag + "v_2m(2i-1,2j) at " + cell_str(i, j); });
        r.check(v(2 * m, 2 * i, 2 * j - 1) == base, [&] { return tag + "v_2m(2i,2j-1) at " + cell_str(i, j); });
        r.check(v(2 * m, 2 * i - 1, 2 * j - 1) == base, [&] { return tag + "v_2m(2i-1,2j-1) at " + cell_str(i, j); });
        // Odd side 2m+1: the cells with one odd and one even coordinate are never P.
        r.check(v(2 * m + 1, 2 * i - 1, 2 * j), [&] { return tag + "v_2m+1(2i-1,2j) at " + cell_str(i, j); });
        r.check(v(2 * m + 1, 2 * i, 2 * j - 1), [&] { return tag + "v_2m+1(2i,2j-1) at " + cell_str(i, j); });
        r.check(v(2 * m + 1, 2 * i, 2 * j) == base, [&] { return tag + "v_2m+1(2i,2j) at " + cell_str(i, j); });
      }
    }
    for (Index i = 1; i <= m + 1; ++i) {
      for (Index j = 1; j <= m + 1; ++j) {
        r.check(v(2 * m + 1, 2 * i - 1, 2 * j - 1) == v(m + 1, i, j), [&] { return tag + "v_2m+1(2i-1,2j-1) at " + cell_str(i, j); });
      }
    }
    r.check(pattern(m).dilate2() == pattern(2 * m), [&] { return tag + "dilation"; });
  }
}

void run_decomposition(SuiteReport& r, unsigned bound) {
  for (Side m = 1; m <= bound; ++m) {
    const std::string tag = "m=" + std::to_string(m) + " ";
    const Pattern direct = pattern(m);
    r.check(pattern_recursive(m) == direct, [&] { return tag + "recursive generator"; });
    r.check(pattern_recursive(m, {.even_shortcut = true}) == direct, [&] { return tag + "recursive with shortcut"; });
    if (m < 2) continue;
    r.check(verify_offdiagonal_empty(m), [&] { return tag + "off-diagonal bands"; });
    const Decomposition d = decompose(m);
    r.check(d.s + d.t == (Side{1} << (d.k + 1)) && 2 * d.s + d.t == m, [&] { return tag + "decomposition fields"; });
    // Each P-position lies in exactly one of the four corners or the center.
    const Index far = m - d.s;
    for (const Cell c : direct.cells()) {
      auto in = [&](Index lo, Index len, Index x) { return x > lo && x <= lo + len; };
      int regions = 0;
      for (const Index oi : {Index{0}, far})
        for (const Index oj : {Index{0}, far})
          regions += in(oi, d.s, c.i) && in(oj, d.s, c.j);
      regions += in(d.s, d.t, c.i) && in(d.s, d.t, c.j);
      r.check(regions == 1, [&] { return tag + "partition at " + cell_str(c.i, c.j); });
    }
  }
}

void run_sums(SuiteReport& r, unsigned bound) {
  if (bound > kMaxSumOrder) {
    throw CapacityError("sums bound " + std::to_string(bound) + " exceeds " +
                        std::to_string(kMaxSumOrder));
  }
  GTable table;
  for (unsigned n = 1; n <= bound; ++n) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    const std::uint64_t top = std::uint64_t{1} << n;
    const Count below = table.range_sum(1, top - 1);
    const Count six = boost::multiprecision::pow(Count(6), n);
    const Count four = boost::multiprecision::pow(Count(4), n);
    const Count three = boost::multiprecision::pow(Count(3), n);
    const Count two = boost::multiprecision::pow(Count(2), n);
    r.check(sum_odd(n) == sum_odd_closed_form(n), [&] { return tag + "odd sum"; });
    r.check(sum_all(n) == sum_all_closed_form(n), [&] { return tag + "total sum"; });
    r.check(below == (two / 2) * (three - two), [&] { return tag + "sum below 2^n"; });
    r.check(table.at(top) + 2 * below == six, [&] { return tag + "g(2^n) + 2 sum"; });
    r.check(g(top) == four, [&] { return tag + "g(2^n) = 4^n"; });
  }
  const std::uint64_t limit = std::min<std::uint64_t>(1024, std::uint64_t{1} << std::min(bound, 10U));
  for (std::uint64_t m = 1; m <= limit; ++m) {
    const Count count = pattern(static_cast<Side>(m)).size();
    r.check(g(m) == count && table.at(m) == count, [&] { return "g(" + std::to_string(m) + ") vs pattern size"; });
  }
}

void run_ca(SuiteReport& r, unsigned bound) {
  for (Side m = 1; m <= bound; ++m) {
    r.check(ca_pattern(m) == pattern(m), [&] { return "m=" + std::to_string(m) + " automaton"; });
  }
}

void run_section(SuiteReport& r, unsigned bound) {
  for (unsigned n = 0; n <= bound; ++n) {
    const std::int64_t top = std::int64_t{1} << n;
    for (std::int64_t m = 1; m <= top; ++m) {
      const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " ";
      const Section sec = integer_section(n, m);
      r.check(Count(sec.diamonds.size()) == g(static_cast<std::uint64_t>(m)), [&] { return tag + "count law"; });
      const SimilarityResult fit = fit_similarity(sec, pattern(static_cast<Side>(m)));
      r.check(static_cast<bool>(fit), [&] { return tag + "similarity: " + fit.reason; });
      if (n + 1 <= kMaxOrder) r.check(check_refinement(n, m), [&] { return tag + "refinement"; });
    }
  }
}

void run_half(SuiteReport& r, unsigned bound) {
  for (unsigned n = 1; n <= bound; ++n) {
    for (std::int64_t m = 1; m < (std::int64_t{1} << n); ++m) {
      r.check(check_half_congruence(n, m), [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
    }
  }
}

void run_xor(SuiteReport& r, unsigned bound) {
  for (std::uint64_t a = 1; a <= bound; ++a) {
    for (std::uint64_t b = 1; b <= bound; ++b) {
      const std::string tag = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " ";
      const unsigned ua = u(a);
      const unsigned ub = u(b);
      if (ua < ub) {
        r.check((a ^ b) == (((a - 1) ^ b) + 1), [&] { return tag + "u(a) < u(b)"; });
      } else if (ua > ub) {
        r.check((a ^ b) == ((a ^ (b - 1)) + 1), [&] { return tag + "u(a) > u(b)"; });
      } else {
        r.check((a ^ b) == ((a - 1) ^ (b - 1)), [&] { return tag + "u(a) = u(b)"; });
      }
      r.check((ua == ub) == ((a ^ (b - 1)) == ((a - 1) ^ b)), [&] { return tag + "equal valuation test"; });
    }
  }
}

constexpr std::array<SuiteInfo, 8> kSuites{{
    {"nim", 12, run_nim},
    {"doubling", 256, run_doubling},
    {"decomposition", 256, run_decomposition},
    {"sums", 16, run_sums},
    {"ca", 256, run_ca},
    {"section", 6, run_section},
    {"half", 6, run_half},
    {"xor", 512, run_xor},
}};

const SuiteInfo& find(std::string_view name) {
  for (const auto& s : kSuites)
    if (name == s.name) return s;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  return std::any_of(kSuites.begin(), kSuites.end(), [&](const SuiteInfo& s) { return name == s.name; });
}

unsigned default_bound(std::string_view suite) { return find(suite).default_bound; }

SuiteReport run_suite(std::string_view suite, unsigned bound) {
  const SuiteInfo& info = find(suite);
  SuiteReport report;
  report.name = info.name;
  report.bound = bound;
  info.run(report, bound);
  return report;
}

}  // namespace choc
