#ifndef TTT_AGENTS_H_
#define TTT_AGENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ttt/core.h"
#include "ttt/labels.h"

namespace ttt {

enum class AgentKind {
  kNormalFirst,
  kMisereMirror,
  kMisereSecond,
  kReverseMisere,
  kPerfect,
  kRandom,
};

// kPaper follows the written strategy literally; kValidated additionally
// keeps only the moves that preserve the solver's game value.
enum class AgentMode { kPaper, kValidated };

// Second move of normal-first after a corner reply, in the orientation where
// the reply is cell 1 and the agent holds the center: the edge between the
// two marks (cell 2) or the far corner of that row (cell 3).
enum class GoodChoice { kEdgeBetween, kFarCorner };

// Default certified by the claim suite as never losing; both options pass,
// so the far corner is preferred.
inline constexpr GoodChoice kShippedGoodChoice = GoodChoice::kFarCorner;

struct AgentSpec {
  AgentKind kind = AgentKind::kPerfect;
  AgentMode mode = AgentMode::kValidated;
  std::uint64_t seed = 0;
  GoodChoice good_choice = kShippedGoodChoice;
  LabelMode label_mode = LabelMode::kMarks;
};

class AgentMisuse : public GameError {
 public:
  using GameError::GameError;
};

class MirrorBroken : public GameError {
 public:
  explicit MirrorBroken(Cell target)
      : GameError("mirror target " + to_string(target) + " is occupied") {}
};

std::string agent_name(AgentKind kind);
AgentKind parse_agent(std::string_view name);
std::string to_string(AgentMode mode);
AgentMode parse_agent_mode(std::string_view name);
std::string to_string(GoodChoice choice);
GoodChoice parse_good_choice(std::string_view name);

// The variant and seat an agent is written for; nullopt means any.
std::optional<Variant> declared_variant(AgentKind kind);
std::optional<Seat> declared_seat(AgentKind kind);

// Throws AgentMisuse when `kind` cannot play `seat` in `variant`.
void check_compatible(AgentKind kind, Variant variant, Seat seat);

bool is_deterministic(AgentKind kind);

// Normal variant: a winning cell for `mover` if any, else a cell blocking an
// opponent line, else nullopt. Lowest index within each group.
std::optional<Cell> emergency_move(const GameState& state, Seat mover);
std::vector<Cell> emergency_candidates(const GameState& state, Seat mover);

Cell normal_first_choose(const GameState& state, const AgentSpec& spec);
Cell mirror_choose(const GameState& state);
Cell misere_second_choose(const GameState& state, const AgentSpec& spec);
Cell reverse_choose(const GameState& state, const AgentSpec& spec);
Cell perfect_choose(const GameState& state);
Cell random_choose(const GameState& state, std::uint64_t seed);

// Every move the strategy allows in `state`, ascending. Deterministic agents
// play the first entry. For the random agent this is every legal move.
std::vector<Cell> agent_candidates(const GameState& state,
                                   const AgentSpec& spec);

// Dispatches on spec.kind and validates variant and seat.
Cell choose_move(const GameState& state, const AgentSpec& spec);

}  // namespace ttt

#endif  // TTT_AGENTS_H_
