#include "choc/game_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "choc/errors.hpp"

namespace choc {

Piles GameState::piles() const {
  return {poison.i - 1, poison.j - 1, w - poison.i, h - poison.j};
}

std::uint32_t GameState::nim_value() const {
  const Piles p = piles();
  return p[0] ^ p[1] ^ p[2] ^ p[3];
}

GameState make_state(Side w, Side h, Cell poison, Player mover) {
  if (w < 1 || h < 1 || w > kMaxSide || h > kMaxSide) {
    throw DomainError("bar " + std::to_string(w) + "x" + std::to_string(h) +
                      " outside supported range");
  }
  if (poison.i < 1 || poison.i > w || poison.j < 1 || poison.j > h) {
    throw DomainError("poison (" + std::to_string(poison.i) + "," + std::to_string(poison.j) +
                      ") outside " + std::to_string(w) + "x" + std::to_string(h) + " bar");
  }
  return GameState{w, h, poison, mover};
}

std::string to_string(Axis axis) { return axis == Axis::vertical ? "vertical" : "horizontal"; }

std::optional<Axis> parse_axis(const std::string& text) {
  if (text == "vertical" || text == "v") return Axis::vertical;
  if (text == "horizontal" || text == "h") return Axis::horizontal;
  return std::nullopt;
}

std::string to_string(const Move& mv) { return to_string(mv.axis) + " " + std::to_string(mv.cut); }

std::vector<Move> legal_moves(const GameState& s) {
  std::vector<Move> moves;
  moves.reserve(s.w + s.h - 2);
  for (Index k = 1; k < s.w; ++k) moves.push_back({Axis::vertical, k});
  for (Index k = 1; k < s.h; ++k) moves.push_back({Axis::horizontal, k});
  return moves;
}

GameState apply_move(const GameState& s, const Move& mv) {
  const Side extent = mv.axis == Axis::vertical ? s.w : s.h;
  if (mv.cut < 1 || mv.cut >= extent) {
    throw IllegalMoveError(to_string(mv) + " outside 1.." + std::to_string(extent == 0 ? 0 : extent - 1));
  }
  GameState next = s;
  next.mover = other(s.mover);
  if (mv.axis == Axis::vertical) {
    if (s.poison.i <= mv.cut) {
      next.w = mv.cut;
    } else {
      next.w = s.w - mv.cut;
      next.poison.i = s.poison.i - mv.cut;
    }
  } else {
    if (s.poison.j <= mv.cut) {
      next.h = mv.cut;
    } else {
      next.h = s.h - mv.cut;
      next.poison.j = s.poison.j - mv.cut;
    }
  }
  return next;
}

MoveAnalysis analyze_move(const GameState& s, const Move& mv) {
  const GameState next = apply_move(s, mv);
  const Piles before = s.piles();
  const Piles after = next.piles();
  MoveAnalysis out;
  out.before = s.nim_value();
  out.after = next.nim_value();
  for (std::size_t k = 0; k < 4; ++k) {
    if (before[k] != after[k]) {
      out.changed_pile = k;
      out.old_pile = before[k];
      out.new_pile = after[k];
    }
  }
  return out;
}

namespace {

// The move that sets pile k of s to `target` (< current value).
Move move_to(const GameState& s, std::size_t k, std::uint32_t target) {
  const Piles p = s.piles();
  switch (k) {
    case 0: return {Axis::vertical, p[0] - target};
    case 1: return {Axis::horizontal, p[1] - target};
    case 2: return {Axis::vertical, s.poison.i + target};
    default: return {Axis::horizontal, s.poison.j + target};
  }
}

}  // namespace

Move best_move(const GameState& s) {
  if (s.terminal()) throw DomainError("no move from the terminal 1x1 bar");
  const Piles p = s.piles();
  const std::uint32_t x = s.nim_value();
  if (x != 0) {
    const std::uint32_t top = std::bit_floor(x);
    for (std::size_t k = 0; k < 4; ++k) {
      if (p[k] & top) return move_to(s, k, p[k] ^ x);
    }
  }
  const std::uint32_t largest = *std::max_element(p.begin(), p.end());
  std::vector<Move> candidates;
  for (std::size_t k = 0; k < 4; ++k) {
    if (p[k] == largest) candidates.push_back(move_to(s, k, largest - 1));
  }
  return *std::min_element(candidates.begin(), candidates.end(), [](const Move& a, const Move& b) {
    if (a.axis != b.axis) return a.axis == Axis::vertical;
    return a.cut < b.cut;
  });
}

Side default_solve_bound() {
  if (const char* env = std::getenv("CHOC_MAX_SOLVE")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 65536) return static_cast<Side>(v);
  }
  return 64;
}

Solver::Solver(Side bound) : bound_(bound) {
  if (bound < 1 || bound > 65536) throw DomainError("solver bound must be in [1, 65536]");
}

Outcome Solver::solve(const GameState& s) {
  if (s.w > bound_ || s.h > bound_) {
    throw CapacityError("bar " + std::to_string(s.w) + "x" + std::to_string(s.h) +
                        " exceeds solver bound " + std::to_string(bound_));
  }
  return is_p(s) ? Outcome::p : Outcome::n;
}

bool Solver::is_p(const GameState& s) {
  Piles p = s.piles();
  std::sort(p.begin(), p.end());
  const std::uint64_t key = (std::uint64_t{p[0]} << 48) | (std::uint64_t{p[1]} << 32) |
                            (std::uint64_t{p[2]} << 16) | std::uint64_t{p[3]};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool result = true;
  for (const Move& mv : legal_moves(s)) {
    if (is_p(apply_move(s, mv))) {
      result = false;
      break;
    }
  }
  memo_.emplace(key, result);
  return result;
}

Outcome solve(const GameState& s) {
  thread_local Solver solver;
  if (solver.bound() != default_solve_bound()) solver = Solver();
  return solver.solve(s);
}

}  // namespace choc
