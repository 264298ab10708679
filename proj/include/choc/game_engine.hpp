#pragma once

// The chocolate game as a playable state machine, an exhaustive solver used as
// an independent oracle, and the optimal engine.
//
// A bar of width w and height h with the poison at (i, j) is the four-pile Nim
// position (i-1, j-1, w-i, h-j): every break shrinks exactly one of the four
// distances from the poison to the bar's edges.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "choc/core_positions.hpp"

namespace choc {

enum class Player : std::uint8_t { a, b };

constexpr Player other(Player p) { return p == Player::a ? Player::b : Player::a; }

enum class Axis : std::uint8_t { vertical, horizontal };

enum class Outcome : std::uint8_t { p, n };

using Piles = std::array<std::uint32_t, 4>;

struct GameState {
  Side w = 1;
  Side h = 1;
  Cell poison;
  Player mover = Player::a;

  bool terminal() const { return w == 1 && h == 1; }

  // (i-1, j-1, w-i, h-j).
  Piles piles() const;

  // Nim-sum of piles().
  std::uint32_t nim_value() const;

  bool operator==(const GameState&) const = default;
};

// Validates the state invariants (sides >= 1, poison inside the bar).
GameState make_state(Side w, Side h, Cell poison, Player mover = Player::a);

// A break along grid line `cut`: vertical lines are 1..w-1 (between columns
// cut and cut+1), horizontal lines are 1..h-1.
struct Move {
  Axis axis = Axis::vertical;
  Index cut = 1;

  bool operator==(const Move&) const = default;
};

std::string to_string(const Move& mv);
std::string to_string(Axis axis);
std::optional<Axis> parse_axis(const std::string& text);

// Vertical cuts 1..w-1 then horizontal cuts 1..h-1.
std::vector<Move> legal_moves(const GameState& s);

// Keeps the piece that holds the poison and hands it to the other player.
// Throws IllegalMoveError for an out-of-range cut.
GameState apply_move(const GameState& s, const Move& mv);

struct MoveAnalysis {
  std::uint32_t before = 0;  // nim-sum of s
  std::uint32_t after = 0;   // nim-sum of apply_move(s, mv)
  std::size_t changed_pile = 0;
  std::uint32_t old_pile = 0;
  std::uint32_t new_pile = 0;
};

// after == before ^ old_pile ^ new_pile for the single pile the move shrinks.
MoveAnalysis analyze_move(const GameState& s, const Move& mv);

// If the nim-sum X is nonzero: take the first pile (in piles() order) that has
// the highest set bit of X and shrink it to X ^ pile. Otherwise shrink the
// largest pile by one, preferring vertical cuts, then lower cut indices.
// Throws DomainError for a terminal state.
Move best_move(const GameState& s);

// Largest bar side the brute-force solver accepts. Defaults to 64 and can be
// overridden with the CHOC_MAX_SOLVE environment variable.
Side default_solve_bound();

// Normal-play backward induction over legal_moves/apply_move, memoized on the
// sorted pile tuple (the game is pile-order invariant Nim). A terminal state
// is P. Not thread-safe; use one instance per thread (the free solve() does).
class Solver {
 public:
  explicit Solver(Side bound = default_solve_bound());

  Side bound() const { return bound_; }

  // Throws CapacityError if w or h exceeds the bound.
  Outcome solve(const GameState& s);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  bool is_p(const GameState& s);

  Side bound_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

Outcome solve(const GameState& s);

}  // namespace choc
