#pragma once

// Four-pile Nim with a single shared pass, laid over the chocolate board via
// (i, j) -> (i-1, j-1, m-i, m-j).
//
// The pass may be used once per game by either player and never from the
// terminal position (all piles empty). Using it clears the flag for both.

#include <cstdint>
#include <mutex>
#include <vector>

#include "choc/core_positions.hpp"
#include "choc/game_engine.hpp"

namespace choc {

// Largest pile the with-pass solver tabulates.
inline constexpr std::uint32_t kMaxPassPile = 63;

// Largest pile for which a game graph is exported.
inline constexpr std::uint32_t kMaxGraphPile = 4;

struct PassState {
  Piles piles{};  // sorted ascending
  bool pass_available = true;

  bool terminal() const { return piles[3] == 0; }

  auto operator<=>(const PassState&) const = default;
};

// Sorts the piles.
PassState make_pass_state(Piles piles, bool pass_available);

// Retrograde classification of every state with piles <= bound, ordered by
// pile sum; within one pile tuple the flag-cleared state is decided first
// because the pass move points to it.
class PassSolver {
 public:
  // Throws CapacityError for bound > kMaxPassPile.
  explicit PassSolver(std::uint32_t bound);

  std::uint32_t bound() const { return bound_; }

  // Piles need not be sorted. Throws CapacityError for a pile above bound().
  Outcome classify(Piles piles, bool pass_available) const;

 private:
  std::size_t index(const Piles& sorted) const;

  std::uint32_t bound_;
  // Bit 0: P with the pass spent; bit 1: P with the pass available.
  std::vector<std::uint8_t> table_;
};

// Classification through a shared, lazily widened solver. Thread-safe.
// Throws CapacityError for a pile above kMaxPassPile.
Outcome solve_pass(const PassState& s);

struct OverlayPattern {
  Side m = 0;
  Pattern blue;  // plain Nim P-positions
  Pattern red;   // with-pass P-positions, pass still available
};

// Throws DomainError for m < 1 and CapacityError for m > kMaxPassPile + 1.
OverlayPattern overlay(Side m);

struct PassGraph {
  struct Node {
    PassState state;
    Outcome outcome;
  };
  struct Edge {
    std::size_t from;
    std::size_t to;
    bool is_pass;
  };
  std::vector<Node> nodes;  // nodes[0] is the start
  std::vector<Edge> edges;
};

// Every state reachable from (piles, pass available), with its outcome.
// Throws CapacityError for a pile above kMaxGraphPile.
PassGraph pass_graph(Piles piles);

}  // namespace choc
