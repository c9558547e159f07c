#ifndef TTT_VERIFIER_H_
#define TTT_VERIFIER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ttt/agents.h"
#include "ttt/solver.h"
#include "json.hpp"

namespace ttt {

enum class Threshold { kWin, kNoLoss };

std::string to_string(Threshold threshold);

struct Guarantee {
  AgentSpec agent;
  Variant variant = Variant::kNormal;
  Seat seat = Seat::kFirst;
  Threshold threshold = Threshold::kNoLoss;
};

// Narrows the traversal. When `opponent_first_moves` is set, the opponent's
// first move only branches over those cells. With `all_candidates`, the agent
// branches over every move its strategy permits instead of its tie-break.
struct TraversalOptions {
  std::optional<std::vector<Cell>> opponent_first_moves;
  bool all_candidates = false;
};

enum class ClaimVerdict { kConfirmed, kRefuted };

std::string to_string(ClaimVerdict verdict);

struct VerificationReport {
  std::string claim_id;
  std::string description;
  bool required = false;
  std::optional<Guarantee> guarantee;
  ClaimVerdict verdict = ClaimVerdict::kConfirmed;
  std::uint64_t games_explored = 0;
  std::optional<Outcome> worst_outcome;
  // Shortest violating game, from the empty board.
  std::optional<std::vector<Cell>> counterexample;
  std::string note;
};

class NotVerifiable : public GameError {
 public:
  using GameError::GameError;
};

// Plays the agent against every opponent reply and compares the worst leaf
// outcome for the agent's seat with the threshold.
VerificationReport verify_guarantee(const Guarantee& guarantee,
                                    const TraversalOptions& options = {});

// normal-first against every opponent whose first reply lies in
// `reply_cells` (the four edges by default), requiring a win.
VerificationReport verify_conditional_win(
    const AgentSpec& agent, std::vector<Cell> reply_cells = {
                                Cell(2), Cell(4), Cell(6), Cell(8)});

struct PunishmentEntry {
  OpeningClass opening;
  // Solver value for Second right after the opening.
  GameValue ground_truth;
  VerificationReport agent_report;
};

struct PunishmentReport {
  LabelMode label_mode;
  std::vector<PunishmentEntry> entries;  // edge, then corner
};

// misere-second against every First continuation after an edge or corner
// opening, plus the solver's verdict for the same openings.
PunishmentReport verify_misere_punishment(LabelMode mode);

// Compares negamax and retrograde values on every reachable canonical state.
VerificationReport verify_dual_oracle(Variant variant);

// Exhaustive property check over the reverse misère game tree: no draws and
// no game longer than 7 moves.
VerificationReport verify_reverse_no_draw();

// The good-choice option picked from the two no-loss verification results.
GoodChoice select_good_choice(bool edge_between_holds, bool far_corner_holds);

struct ClaimFilter {
  std::optional<std::string> claim_id;
  std::optional<LabelMode> label_mode;
  std::optional<AgentMode> mode;
};

struct ClaimSuiteReport {
  std::vector<VerificationReport> claims;
  std::vector<OpeningTable> openings;
  GoodChoice shipped_good_choice = kShippedGoodChoice;

  // True iff every required claim is confirmed.
  bool required_hold() const;
};

ClaimSuiteReport claim_suite(const ClaimFilter& filter = {});

// Ids of every claim the suite can run, in report order.
std::vector<std::string> claim_ids();

std::string format_text(const ClaimSuiteReport& report);
nlohmann::json to_json(const ClaimSuiteReport& report);
nlohmann::json to_json(const VerificationReport& report);

// Replays a counterexample and returns its outcome.
Outcome replay_outcome(Variant variant, const std::vector<Cell>& moves);

}  // namespace ttt

#endif  // TTT_VERIFIER_H_
