#include "ttt/solver.h"

#include <algorithm>

namespace ttt {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kWin:
      return "Win";
    case Verdict::kDraw:
      return "Draw";
    case Verdict::kLoss:
      return "Loss";
  }
  return "?";
}

Verdict parse_verdict(std::string_view name) {
  if (name == "Win") return Verdict::kWin;
  if (name == "Draw") return Verdict::kDraw;
  if (name == "Loss") return Verdict::kLoss;
  throw GameError("unknown verdict: " + std::string(name));
}

std::string to_string(const GameValue& value) {
  return to_string(value.verdict) + " in " + std::to_string(value.distance);
}

GameValue negate(const GameValue& child) {
  Verdict flipped = child.verdict;
  if (child.verdict == Verdict::kWin) flipped = Verdict::kLoss;
  if (child.verdict == Verdict::kLoss) flipped = Verdict::kWin;
  return {flipped, child.distance + 1};
}

bool better(const GameValue& a, const GameValue& b) {
  if (a.verdict != b.verdict) return a.verdict > b.verdict;
  switch (a.verdict) {
    case Verdict::kWin:
      return a.distance < b.distance;
    case Verdict::kLoss:
      return a.distance > b.distance;
    case Verdict::kDraw:
      break;
  }
  return false;
}

GameValue terminal_value(const GameState& state) {
  const auto outcome = terminal_status(state);
  if (!outcome) throw GameError("terminal_value on a live state");
  switch (outcome_score(*outcome, state.to_move())) {
    case 1:
      return {Verdict::kWin, 0};
    case -1:
      return {Verdict::kLoss, 0};
  }
  return {Verdict::kDraw, 0};
}

std::uint32_t state_key(const GameState& canonical) {
  std::uint32_t base3 = 0;
  for (Mark m : canonical.board()) base3 = base3 * 3 + static_cast<int>(m);
  const std::uint32_t seat = canonical.to_move() == Seat::kFirst ? 0 : 1;
  return (base3 * 2 + seat) * 3 + static_cast<int>(canonical.variant());
}

GameValue NegamaxSolver::solve(const GameState& state) {
  return search(canonicalize(state).first);
}

GameValue NegamaxSolver::search(const GameState& canonical) {
  const std::uint32_t key = state_key(canonical);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  GameValue value;
  if (is_terminal(canonical)) {
    value = terminal_value(canonical);
  } else {
    bool first = true;
    for (Cell move : legal_moves(canonical)) {
      const GameState child = apply_move(canonical, move);
      const GameValue candidate = negate(search(canonicalize(child).first));
      if (first || better(candidate, value)) {
        value = candidate;
        first = false;
      }
    }
  }
  memo_.emplace(key, value);
  return value;
}

SolverTables::SolverTables() {
  for (Variant v :
       {Variant::kNormal, Variant::kMisere, Variant::kReverseMisere}) {
    NegamaxSolver solver;
    solver.solve(GameState(v));
    sizes_[static_cast<int>(v)] = solver.table_size();
    values_.insert(solver.table().begin(), solver.table().end());
  }
}

GameValue SolverTables::solve(const GameState& state) const {
  const auto it = values_.find(state_key(canonicalize(state).first));
  if (it != values_.end()) return it->second;
  // Every decodable state is reachable, so this only happens for states
  // built by hand outside the public constructors.
  NegamaxSolver fallback;
  return fallback.solve(state);
}

std::size_t SolverTables::size(Variant variant) const {
  return sizes_[static_cast<int>(variant)];
}

const SolverTables& shared_solver() {
  static const SolverTables tables;
  return tables;
}

GameValue solve(const GameState& state) { return shared_solver().solve(state); }

std::vector<Cell> best_moves(const GameState& state) {
  std::vector<Cell> out;
  std::optional<GameValue> best;
  for (Cell move : legal_moves(state)) {
    const GameValue value = negate(solve(apply_move(state, move)));
    if (!best || better(value, *best)) {
      best = value;
      out.clear();
    }
    if (value == *best) out.push_back(move);
  }
  return out;
}

std::string to_string(OpeningClass opening) {
  switch (opening) {
    case OpeningClass::kCenter:
      return "center";
    case OpeningClass::kEdge:
      return "edge";
    case OpeningClass::kCorner:
      return "corner";
  }
  return "?";
}

Cell representative(OpeningClass opening) {
  switch (opening) {
    case OpeningClass::kEdge:
      return Cell(2);
    case OpeningClass::kCorner:
      return Cell(1);
    case OpeningClass::kCenter:
      break;
  }
  return kCenter;
}

OpeningTable opening_table(Variant variant) {
  OpeningTable table{variant, {}};
  for (OpeningClass opening :
       {OpeningClass::kCenter, OpeningClass::kEdge, OpeningClass::kCorner}) {
    const GameState after = apply_move(GameState(variant), representative(opening));
    table.entries[opening] = negate(solve(after));
  }
  return table;
}

std::string dump_table(Variant variant) {
  std::string out;
  for (const GameState& state : reachable_canonical_states(variant)) {
    const GameValue value = solve(state);
    out += encode_state(state) + " " + to_string(value.verdict) + " " +
           std::to_string(value.distance) + "\n";
  }
  return out;
}

}  // namespace ttt
