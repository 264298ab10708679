#include "choc/nim_pass.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>

#include "choc/errors.hpp"

namespace choc {

namespace {

constexpr std::uint8_t kPassSpentP = 1;
constexpr std::uint8_t kPassAvailableP = 2;

void check_piles(const Piles& piles, std::uint32_t bound) {
  for (const auto p : piles) {
    if (p > bound) {
      throw CapacityError("pile " + std::to_string(p) + " exceeds bound " + std::to_string(bound));
    }
  }
}

// Sorted successors reachable by removing stones from one pile.
template <typename Fn>
void for_each_take(const Piles& sorted, Fn&& fn) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (k > 0 && sorted[k] == sorted[k - 1]) continue;
    for (std::uint32_t v = 0; v < sorted[k]; ++v) {
      Piles next = sorted;
      next[k] = v;
      std::sort(next.begin(), next.end());
      if (!fn(next)) return;
    }
  }
}

}  // namespace

PassState make_pass_state(Piles piles, bool pass_available) {
  std::sort(piles.begin(), piles.end());
  return {piles, pass_available};
}

PassSolver::PassSolver(std::uint32_t bound) : bound_(bound) {
  if (bound > kMaxPassPile) {
    throw CapacityError("pass solver bound " + std::to_string(bound) + " exceeds " +
                        std::to_string(kMaxPassPile));
  }
  const std::size_t side = bound + 1;
  table_.assign(side * side * side * side, 0);

  std::vector<Piles> order;
  for (std::uint32_t a = 0; a <= bound; ++a)
    for (std::uint32_t b = a; b <= bound; ++b)
      for (std::uint32_t c = b; c <= bound; ++c)
        for (std::uint32_t d = c; d <= bound; ++d) order.push_back({a, b, c, d});
  std::stable_sort(order.begin(), order.end(), [](const Piles& x, const Piles& y) {
    return x[0] + x[1] + x[2] + x[3] < y[0] + y[1] + y[2] + y[3];
  });

  for (const Piles& s : order) {
    std::uint8_t bits = 0;

    bool spent_p = true;
    for_each_take(s, [&](const Piles& next) {
      if (table_[index(next)] & kPassSpentP) spent_p = false;
      return spent_p;
    });
    if (spent_p) bits |= kPassSpentP;

    const bool terminal = s[3] == 0;
    bool available_p = terminal || !spent_p;
    if (available_p) {
      for_each_take(s, [&](const Piles& next) {
        if (table_[index(next)] & kPassAvailableP) available_p = false;
        return available_p;
      });
    }
    if (available_p) bits |= kPassAvailableP;

    table_[index(s)] = bits;
  }
}

std::size_t PassSolver::index(const Piles& sorted) const {
  const std::size_t side = bound_ + 1;
  return ((sorted[0] * side + sorted[1]) * side + sorted[2]) * side + sorted[3];
}

Outcome PassSolver::classify(Piles piles, bool pass_available) const {
  check_piles(piles, bound_);
  std::sort(piles.begin(), piles.end());
  const std::uint8_t bit = pass_available ? kPassAvailableP : kPassSpentP;
  return (table_[index(piles)] & bit) ? Outcome::p : Outcome::n;
}

Outcome solve_pass(const PassState& s) {
  static std::mutex mutex;
  static std::shared_ptr<const PassSolver> shared;
  check_piles(s.piles, kMaxPassPile);
  const std::uint32_t needed = *std::max_element(s.piles.begin(), s.piles.end());
  std::shared_ptr<const PassSolver> solver;
  {
    std::lock_guard lock(mutex);
    if (!shared || shared->bound() < needed) {
      // Widen in steps so repeated growth stays cheap.
      const std::uint32_t bound = std::min(kMaxPassPile, std::max<std::uint32_t>(needed, 31));
      shared = std::make_shared<const PassSolver>(bound);
    }
    solver = shared;
  }
  return solver->classify(s.piles, s.pass_available);
}

OverlayPattern overlay(Side m) {
  if (m < 1) throw DomainError("overlay side must be >= 1");
  if (m > kMaxPassPile + 1) {
    throw CapacityError("overlay side " + std::to_string(m) + " exceeds " +
                        std::to_string(kMaxPassPile + 1));
  }
  OverlayPattern out{m, Pattern(m), Pattern(m)};
  for (Index i = 1; i <= m; ++i) {
    for (Index j = 1; j <= m; ++j) {
      const Piles piles{i - 1, j - 1, m - i, m - j};
      if ((piles[0] ^ piles[1] ^ piles[2] ^ piles[3]) == 0) out.blue.insert(i, j);
      if (solve_pass(make_pass_state(piles, true)) == Outcome::p) out.red.insert(i, j);
    }
  }
  return out;
}

PassGraph pass_graph(Piles piles) {
  check_piles(piles, kMaxGraphPile);
  PassGraph graph;
  std::map<PassState, std::size_t> ids;
  auto intern = [&](const PassState& s) {
    auto [it, inserted] = ids.emplace(s, graph.nodes.size());
    if (inserted) graph.nodes.push_back({s, solve_pass(s)});
    return std::pair{it->second, inserted};
  };
  std::vector<std::size_t> stack{intern(make_pass_state(piles, true)).first};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    const PassState s = graph.nodes[id].state;
    auto link = [&](const PassState& next, bool is_pass) {
      const auto [to, fresh] = intern(next);
      graph.edges.push_back({id, to, is_pass});
      if (fresh) stack.push_back(to);
    };
    for_each_take(s.piles, [&](const Piles& next) {
      link({next, s.pass_available}, false);
      return true;
    });
    if (s.pass_available && !s.terminal()) link({s.piles, false}, true);
  }
  return graph;
}

}  // namespace choc
