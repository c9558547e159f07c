#include "ttt/agents.h"

#include <algorithm>
#include <random>
#include <set>

#include "ttt/solver.h"

namespace ttt {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw AgentMisuse(what);
}

void require_turn(const GameState& state, AgentKind kind) {
  check_compatible(kind, state.variant(), state.to_move());
  require(!is_terminal(state), agent_name(kind) + " asked to move after the end");
}

// Images of `figure_move` under every transform taking `reply` onto
// `figure_reply`, i.e. the figure's answer carried into the actual board.
std::vector<Cell> oriented(Cell reply, Cell figure_reply, Cell figure_move) {
  std::set<Cell> out;
  for (int t = 0; t < kTransformCount; ++t) {
    if (transform_cell(t, reply) == figure_reply) {
      out.insert(transform_cell(inverse_transform(t), figure_move));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Cell> only_empty(const GameState& state, std::vector<Cell> cells) {
  std::erase_if(cells, [&](Cell c) { return !state.is_empty(c); });
  return cells;
}

std::vector<Cell> lowest_legal(const GameState& state) {
  const auto moves = legal_moves(state);
  if (moves.empty()) return {};
  return {moves.front()};
}

std::vector<Cell> normal_first_candidates(const GameState& state,
                                          const AgentSpec& spec) {
  const auto& history = state.history();
  if (history.empty()) return {kCenter};
  if (history.size() == 2 && history[0] == kCenter) {
    const Cell reply = history[1];
    std::vector<Cell> picks;
    if (reply.is_edge()) {
      picks = oriented(reply, Cell(2), Cell(1));
    } else if (reply.is_corner()) {
      const Cell figure_move =
          spec.good_choice == GoodChoice::kEdgeBetween ? Cell(2) : Cell(3);
      picks = oriented(reply, Cell(1), figure_move);
    }
    picks = only_empty(state, std::move(picks));
    if (!picks.empty()) return picks;
  }
  if (auto urgent = emergency_candidates(state, Seat::kFirst); !urgent.empty()) {
    return urgent;
  }
  return clever_candidates(state, Seat::kFirst, spec.label_mode);
}

std::vector<Cell> mirror_candidates(const GameState& state) {
  const auto last = state.last_move();
  if (!last) return {kCenter};
  const Cell target = mirror_cell(*last);
  if (!state.is_empty(target)) throw MirrorBroken(target);
  return {target};
}

std::vector<Cell> misere_second_candidates(const GameState& state,
                                           const AgentSpec& spec) {
  auto cells = avoidance_candidates(state, Seat::kSecond, spec.label_mode);
  if (cells.empty()) return lowest_legal(state);
  return cells;
}

std::vector<Cell> reverse_candidates(const GameState& state,
                                     const AgentSpec& spec) {
  const auto& history = state.history();
  if (history.empty()) return {kCenter};
  if (history.size() == 2 && history[0] == kCenter) {
    return only_empty(state, knight_targets(history[1]));
  }
  std::vector<Cell> safe;
  for (Cell c : legal_moves(state)) {
    if (!completes_own_line(state, c, state.to_move())) safe.push_back(c);
  }
  if (safe.empty()) return lowest_legal(state);
  if (spec.mode == AgentMode::kPaper) return safe;

  const Verdict target = solve(state).verdict;
  std::vector<Cell> keep;
  for (Cell c : safe) {
    if (negate(solve(apply_move(state, c))).verdict == target) {
      keep.push_back(c);
    }
  }
  return keep.empty() ? safe : keep;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string agent_name(AgentKind kind) {
  switch (kind) {
    case AgentKind::kNormalFirst:
      return "normal-first";
    case AgentKind::kMisereMirror:
      return "misere-mirror";
    case AgentKind::kMisereSecond:
      return "misere-second";
    case AgentKind::kReverseMisere:
      return "reverse-misere";
    case AgentKind::kPerfect:
      return "perfect";
    case AgentKind::kRandom:
      return "random";
  }
  return "?";
}

AgentKind parse_agent(std::string_view name) {
  for (AgentKind kind :
       {AgentKind::kNormalFirst, AgentKind::kMisereMirror,
        AgentKind::kMisereSecond, AgentKind::kReverseMisere,
        AgentKind::kPerfect, AgentKind::kRandom}) {
    if (agent_name(kind) == name) return kind;
  }
  throw GameError("unknown agent: " + std::string(name));
}

std::string to_string(AgentMode mode) {
  return mode == AgentMode::kPaper ? "paper" : "validated";
}

AgentMode parse_agent_mode(std::string_view name) {
  if (name == "paper") return AgentMode::kPaper;
  if (name == "validated") return AgentMode::kValidated;
  throw GameError("unknown mode: " + std::string(name));
}

std::string to_string(GoodChoice choice) {
  return choice == GoodChoice::kEdgeBetween ? "edge-between" : "far-corner";
}

GoodChoice parse_good_choice(std::string_view name) {
  if (name == "edge-between") return GoodChoice::kEdgeBetween;
  if (name == "far-corner") return GoodChoice::kFarCorner;
  throw GameError("unknown good-choice option: " + std::string(name));
}

std::optional<Variant> declared_variant(AgentKind kind) {
  switch (kind) {
    case AgentKind::kNormalFirst:
      return Variant::kNormal;
    case AgentKind::kMisereMirror:
    case AgentKind::kMisereSecond:
      return Variant::kMisere;
    case AgentKind::kReverseMisere:
      return Variant::kReverseMisere;
    case AgentKind::kPerfect:
    case AgentKind::kRandom:
      break;
  }
  return std::nullopt;
}

std::optional<Seat> declared_seat(AgentKind kind) {
  switch (kind) {
    case AgentKind::kNormalFirst:
    case AgentKind::kMisereMirror:
    case AgentKind::kReverseMisere:
      return Seat::kFirst;
    case AgentKind::kMisereSecond:
      return Seat::kSecond;
    case AgentKind::kPerfect:
    case AgentKind::kRandom:
      break;
  }
  return std::nullopt;
}

void check_compatible(AgentKind kind, Variant variant, Seat seat) {
  if (auto v = declared_variant(kind); v && *v != variant) {
    throw AgentMisuse(agent_name(kind) + " plays only the " + to_string(*v) +
                      " variant, not " + to_string(variant));
  }
  if (auto s = declared_seat(kind); s && *s != seat) {
    throw AgentMisuse(agent_name(kind) + " plays only the " + to_string(*s) +
                      " seat, not " + to_string(seat));
  }
}

bool is_deterministic(AgentKind kind) { return kind != AgentKind::kRandom; }

std::vector<Cell> emergency_candidates(const GameState& state, Seat mover) {
  std::vector<Cell> wins, blocks;
  for (Cell c : legal_moves(state)) {
    if (completes_own_line(state, c, mover)) wins.push_back(c);
    if (completes_own_line(state, c, opponent(mover))) blocks.push_back(c);
  }
  return wins.empty() ? blocks : wins;
}

std::optional<Cell> emergency_move(const GameState& state, Seat mover) {
  require(state.variant() == Variant::kNormal,
          "the emergency rule applies to the normal variant");
  const auto cells = emergency_candidates(state, mover);
  if (cells.empty()) return std::nullopt;
  return cells.front();
}

Cell normal_first_choose(const GameState& state, const AgentSpec& spec) {
  require_turn(state, AgentKind::kNormalFirst);
  return normal_first_candidates(state, spec).front();
}

Cell mirror_choose(const GameState& state) {
  require_turn(state, AgentKind::kMisereMirror);
  return mirror_candidates(state).front();
}

Cell misere_second_choose(const GameState& state, const AgentSpec& spec) {
  require_turn(state, AgentKind::kMisereSecond);
  return misere_second_candidates(state, spec).front();
}

Cell reverse_choose(const GameState& state, const AgentSpec& spec) {
  require_turn(state, AgentKind::kReverseMisere);
  return reverse_candidates(state, spec).front();
}

Cell perfect_choose(const GameState& state) {
  const auto moves = best_moves(state);
  if (moves.empty()) throw GameError("no move exists in a terminal state");
  return moves.front();
}

Cell random_choose(const GameState& state, std::uint64_t seed) {
  const auto moves = legal_moves(state);
  if (moves.empty()) throw GameError("no move exists in a terminal state");
  std::uint64_t mixed = splitmix(seed);
  for (Cell c : state.history()) mixed = splitmix(mixed ^ c.index());
  std::mt19937_64 rng(mixed);
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  return moves[pick(rng)];
}

std::vector<Cell> agent_candidates(const GameState& state,
                                   const AgentSpec& spec) {
  if (is_terminal(state)) return {};
  switch (spec.kind) {
    case AgentKind::kNormalFirst:
      return normal_first_candidates(state, spec);
    case AgentKind::kMisereMirror:
      return mirror_candidates(state);
    case AgentKind::kMisereSecond:
      return misere_second_candidates(state, spec);
    case AgentKind::kReverseMisere:
      return reverse_candidates(state, spec);
    case AgentKind::kPerfect:
      return best_moves(state);
    case AgentKind::kRandom:
      break;
  }
  return legal_moves(state);
}

Cell choose_move(const GameState& state, const AgentSpec& spec) {
  switch (spec.kind) {
    case AgentKind::kNormalFirst:
      return normal_first_choose(state, spec);
    case AgentKind::kMisereMirror:
      return mirror_choose(state);
    case AgentKind::kMisereSecond:
      return misere_second_choose(state, spec);
    case AgentKind::kReverseMisere:
      return reverse_choose(state, spec);
    case AgentKind::kPerfect:
      return perfect_choose(state);
    case AgentKind::kRandom:
      break;
  }
  return random_choose(state, spec.seed);
}

}  // namespace ttt
