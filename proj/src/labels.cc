#include "ttt/labels.h"

#include <algorithm>

namespace ttt {
namespace {

bool safety_applies(Variant variant) { return variant != Variant::kNormal; }

std::vector<Cell> safe_cells(const GameState& state, Seat mover) {
  std::vector<Cell> out;
  for (Cell c : legal_moves(state)) {
    if (safety_applies(state.variant()) &&
        completes_own_line(state, c, mover)) {
      continue;
    }
    out.push_back(c);
  }
  return out;
}

// Cells whose label is extremal (max when `highest`), ascending.
std::vector<Cell> extremal(const std::vector<Cell>& cells,
                           const LabelGrid& grid, bool highest) {
  std::vector<Cell> out;
  int best = 0;
  for (Cell c : cells) {
    const int label = grid.at(c);
    if (out.empty() || (highest ? label > best : label < best)) {
      best = label;
      out.clear();
    }
    if (label == best) out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_string(LabelMode mode) {
  return mode == LabelMode::kMarks ? "marks" : "lines";
}

LabelMode parse_label_mode(std::string_view name) {
  if (name == "marks") return LabelMode::kMarks;
  if (name == "lines") return LabelMode::kLines;
  throw GameError("unknown label mode: " + std::string(name));
}

LabelGrid label_grid(const GameState& state, Seat perspective,
                     LabelMode mode) {
  const Mark own = mark_for(state.variant(), perspective);
  const Mark other = mark_for(state.variant(), opponent(perspective));
  LabelGrid grid{perspective, {}};
  for (Cell cell : all_cells()) {
    if (!state.is_empty(cell)) continue;
    int label = 0;
    for (const Line& line : lines_through(cell)) {
      int marks = 0;
      bool dead = false;
      for (Cell c : line) {
        if (state.at(c) == own) {
          ++marks;
        } else if (state.at(c) == other) {
          dead = true;
        }
      }
      if (dead) continue;
      label += mode == LabelMode::kMarks ? marks : (marks > 0 ? 1 : 0);
    }
    grid.labels.emplace(cell, label);
  }
  return grid;
}

std::vector<Cell> clever_candidates(const GameState& state, Seat mover,
                                    LabelMode mode) {
  return extremal(safe_cells(state, mover), label_grid(state, mover, mode),
                  /*highest=*/true);
}

std::vector<Cell> avoidance_candidates(const GameState& state, Seat mover,
                                       LabelMode mode) {
  return extremal(safe_cells(state, mover),
                  label_grid(state, opponent(mover), mode),
                  /*highest=*/false);
}

Cell clever_choice(const GameState& state, Seat mover, LabelMode mode) {
  const auto cells = clever_candidates(state, mover, mode);
  if (cells.empty()) throw NoSafeMove();
  return cells.front();
}

Cell avoidance_choice(const GameState& state, Seat mover, LabelMode mode) {
  const auto cells = avoidance_candidates(state, mover, mode);
  if (cells.empty()) throw NoSafeMove();
  return cells.front();
}

}  // namespace ttt
