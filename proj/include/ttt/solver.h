#ifndef TTT_SOLVER_H_
#define TTT_SOLVER_H_

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ttt/core.h"

namespace ttt {

enum class Verdict : std::uint8_t { kLoss, kDraw, kWin };

std::string to_string(Verdict verdict);
Verdict parse_verdict(std::string_view name);

// Exact value for the seat to move. `distance` counts plies to the end of the
// game under optimal play (fastest win, slowest loss).
struct GameValue {
  Verdict verdict = Verdict::kDraw;
  int distance = 0;

  friend bool operator==(const GameValue&, const GameValue&) = default;
};

std::string to_string(const GameValue& value);

// Value of the parent position given the value of a child, one ply earlier.
GameValue negate(const GameValue& child);

// True when `a` is strictly preferable to `b` for the seat to move.
bool better(const GameValue& a, const GameValue& b);

// Value of a terminal state for its seat to move.
GameValue terminal_value(const GameState& state);

// Memo key: canonical board in base 3, seat to move, variant.
std::uint32_t state_key(const GameState& canonical);

// Memoized negamax over canonical states. Not thread-safe while solving;
// use shared_solver() for the read-only published tables.
class NegamaxSolver {
 public:
  GameValue solve(const GameState& state);
  std::size_t table_size() const { return memo_.size(); }
  const std::unordered_map<std::uint32_t, GameValue>& table() const {
    return memo_;
  }

 private:
  GameValue search(const GameState& canonical);

  std::unordered_map<std::uint32_t, GameValue> memo_;
};

// Negamax tables for all three variants, built once from the empty boards
// and then shared read-only between threads.
class SolverTables {
 public:
  SolverTables();

  GameValue solve(const GameState& state) const;
  std::size_t size(Variant variant) const;

 private:
  std::unordered_map<std::uint32_t, GameValue> values_;
  std::size_t sizes_[3] = {0, 0, 0};
};

const SolverTables& shared_solver();

GameValue solve(const GameState& state);

// Every move reaching the optimal value, ascending. Empty when terminal.
std::vector<Cell> best_moves(const GameState& state);

// Canonical encoding -> value for every reachable canonical state of a
// variant, computed by backward induction over mark-count layers without
// the negamax search path.
std::map<std::string, GameValue> build_retrograde_table(Variant variant);

enum class OpeningClass { kCenter, kEdge, kCorner };

std::string to_string(OpeningClass opening);
Cell representative(OpeningClass opening);

struct OpeningTable {
  Variant variant;
  // Values from the first player's perspective after the opening move.
  std::map<OpeningClass, GameValue> entries;
};

OpeningTable opening_table(Variant variant);

// All reachable canonical states of a variant, ordered by encoding.
std::vector<GameState> reachable_canonical_states(Variant variant);

// "<encoding> <verdict> <distance>" per reachable canonical state, sorted by
// encoding.
std::string dump_table(Variant variant);

}  // namespace ttt

#endif  // TTT_SOLVER_H_
