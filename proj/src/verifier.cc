#include "ttt/verifier.h"

#include <functional>
#include <sstream>

namespace ttt {
namespace {

const std::vector<Cell> kEdges = {Cell(2), Cell(4), Cell(6), Cell(8)};
const std::vector<Cell> kCorners = {Cell(1), Cell(3), Cell(7), Cell(9)};

int required_score(Threshold threshold) {
  return threshold == Threshold::kWin ? 1 : 0;
}

Outcome outcome_for_score(int score, Seat seat) {
  if (score == 0) return Outcome::kDraw;
  const Seat winner = score > 0 ? seat : opponent(seat);
  return winner == Seat::kFirst ? Outcome::kFirstWins : Outcome::kSecondWins;
}

class Traversal {
 public:
  Traversal(const Guarantee& guarantee, const TraversalOptions& options)
      : g_(guarantee), options_(options) {}

  VerificationReport run() {
    visit(GameState(g_.variant));
    VerificationReport report;
    report.guarantee = g_;
    report.games_explored = games_;
    report.worst_outcome = outcome_for_score(worst_, g_.seat);
    report.verdict = shortest_ ? ClaimVerdict::kRefuted : ClaimVerdict::kConfirmed;
    report.counterexample = shortest_;
    return report;
  }

 private:
  void visit(const GameState& state) {
    if (const auto outcome = terminal_status(state)) {
      ++games_;
      const int score = outcome_score(*outcome, g_.seat);
      worst_ = std::min(worst_, score);
      if (score < required_score(g_.threshold) &&
          (!shortest_ || state.history().size() < shortest_->size())) {
        shortest_ = state.history();
      }
      return;
    }
    std::vector<Cell> moves;
    if (state.to_move() == g_.seat) {
      moves = options_.all_candidates
                  ? agent_candidates(state, g_.agent)
                  : std::vector<Cell>{choose_move(state, g_.agent)};
    } else {
      moves = legal_moves(state);
      if (options_.opponent_first_moves && is_opponent_first_move(state)) {
        std::erase_if(moves, [&](Cell c) {
          const auto& allowed = *options_.opponent_first_moves;
          return std::find(allowed.begin(), allowed.end(), c) == allowed.end();
        });
      }
    }
    for (Cell move : moves) visit(apply_move(state, move));
  }

  bool is_opponent_first_move(const GameState& state) const {
    const std::size_t plies = state.history().size();
    return g_.seat == Seat::kFirst ? plies == 1 : plies == 0;
  }

  Guarantee g_;
  TraversalOptions options_;
  std::uint64_t games_ = 0;
  int worst_ = 1;
  std::optional<std::vector<Cell>> shortest_;
};

AgentSpec spec_of(AgentKind kind, AgentMode mode = AgentMode::kValidated) {
  AgentSpec spec;
  spec.kind = kind;
  spec.mode = mode;
  return spec;
}

VerificationReport named(VerificationReport report, std::string id,
                         std::string description, bool required) {
  report.claim_id = std::move(id);
  report.description = std::move(description);
  report.required = required;
  return report;
}

VerificationReport opening_claim(std::string id, std::string description,
                                 Variant variant, OpeningClass opening,
                                 Verdict expected) {
  const OpeningTable table = opening_table(variant);
  const GameValue value = table.entries.at(opening);
  VerificationReport report;
  report.games_explored = 1;
  report.verdict = value.verdict == expected ? ClaimVerdict::kConfirmed
                                             : ClaimVerdict::kRefuted;
  report.note = "first player " + to_string(value) + ", expected " +
                to_string(expected);
  if (report.verdict == ClaimVerdict::kRefuted) {
    report.counterexample = std::vector<Cell>{representative(opening)};
  }
  return named(std::move(report), std::move(id), std::move(description), true);
}

VerificationReport misere_solver_claim(OpeningClass opening) {
  const Cell first = representative(opening);
  const GameValue value = solve(apply_move(GameState(Variant::kMisere), first));
  VerificationReport report;
  report.games_explored = 1;
  report.verdict = value.verdict == Verdict::kWin ? ClaimVerdict::kConfirmed
                                                  : ClaimVerdict::kRefuted;
  report.note = "second player " + to_string(value);
  if (report.verdict == ClaimVerdict::kRefuted) {
    report.counterexample = std::vector<Cell>{first};
  }
  return named(std::move(report), "misere-" + to_string(opening) + "-opening-solver",
               "solver: Second forces a win after a misère " + to_string(opening) +
                   " opening",
               true);
}

VerificationReport misere_second_claim(OpeningClass opening, LabelMode mode) {
  const PunishmentReport full = verify_misere_punishment(mode);
  for (const PunishmentEntry& entry : full.entries) {
    if (entry.opening != opening) continue;
    VerificationReport report = entry.agent_report;
    report.note = "solver ground truth for Second: " + to_string(entry.ground_truth);
    return named(std::move(report),
                 "misere-second-" + to_string(opening) + "-" + to_string(mode),
                 "misere-second (" + to_string(mode) +
                     " labels) always wins after " +
                     (opening == OpeningClass::kEdge ? "an edge" : "a corner") +
                     " opening",
                 false);
  }
  throw GameError("missing punishment entry");
}

struct ClaimDef {
  std::string id;
  std::optional<LabelMode> label_mode;
  std::optional<AgentMode> mode;
  std::function<VerificationReport()> run;
};

AgentSpec normal_first(GoodChoice choice) {
  AgentSpec spec = spec_of(AgentKind::kNormalFirst);
  spec.good_choice = choice;
  return spec;
}

VerificationReport good_choice_claim(GoodChoice choice) {
  return named(verify_guarantee({normal_first(choice), Variant::kNormal,
                                 Seat::kFirst, Threshold::kNoLoss}),
               "normal-first-" + to_string(choice) + "-no-loss",
               "normal-first with the " + to_string(choice) +
                   " good choice never loses",
               false);
}

std::vector<ClaimDef> claim_defs() {
  std::vector<ClaimDef> defs;
  for (Variant v :
       {Variant::kNormal, Variant::kMisere, Variant::kReverseMisere}) {
    defs.push_back({"solver-dual-oracle-" + to_string(v), {}, {},
                    [v] { return verify_dual_oracle(v); }});
  }
  defs.push_back({"opening-normal-draw", {}, {}, [] {
                    const GameValue root = solve(GameState(Variant::kNormal));
                    VerificationReport report;
                    report.games_explored = 1;
                    report.verdict = root.verdict == Verdict::kDraw
                                         ? ClaimVerdict::kConfirmed
                                         : ClaimVerdict::kRefuted;
                    report.note = "empty board " + to_string(root);
                    return named(std::move(report), "opening-normal-draw",
                                 "normal: perfect play from the empty board draws",
                                 true);
                  }});
  defs.push_back({"opening-misere-center-draw", {}, {}, [] {
                    return opening_claim("opening-misere-center-draw",
                                         "misère: a center opening draws",
                                         Variant::kMisere, OpeningClass::kCenter,
                                         Verdict::kDraw);
                  }});
  defs.push_back({"opening-misere-edge-loss", {}, {}, [] {
                    return opening_claim("opening-misere-edge-loss",
                                         "misère: an edge opening loses",
                                         Variant::kMisere, OpeningClass::kEdge,
                                         Verdict::kLoss);
                  }});
  defs.push_back({"opening-misere-corner-loss", {}, {}, [] {
                    return opening_claim("opening-misere-corner-loss",
                                         "misère: a corner opening loses",
                                         Variant::kMisere, OpeningClass::kCorner,
                                         Verdict::kLoss);
                  }});
  defs.push_back({"opening-reverse-misere-center-win", {}, {}, [] {
                    return opening_claim(
                        "opening-reverse-misere-center-win",
                        "reverse misère: a center opening wins",
                        Variant::kReverseMisere, OpeningClass::kCenter,
                        Verdict::kWin);
                  }});
  defs.push_back({"normal-first-no-loss", {}, {}, [] {
                    return named(
                        verify_guarantee({normal_first(kShippedGoodChoice),
                                          Variant::kNormal, Seat::kFirst,
                                          Threshold::kNoLoss}),
                        "normal-first-no-loss",
                        "normal-first (shipped good choice) never loses", true);
                  }});
  defs.push_back({"normal-first-edge-reply-win", {}, {}, [] {
                    return named(verify_conditional_win(
                                     normal_first(kShippedGoodChoice)),
                                 "normal-first-edge-reply-win",
                                 "normal-first wins whenever the first reply is "
                                 "an edge",
                                 true);
                  }});
  defs.push_back({"normal-first-corner-reply-win", {}, {}, [] {
                    VerificationReport report = named(
                        verify_conditional_win(normal_first(kShippedGoodChoice),
                                               kCorners),
                        "normal-first-corner-reply-win",
                        "normal-first wins whenever the first reply is a corner "
                        "(expected to fail: a careful opponent draws)",
                        false);
                    return report;
                  }});
  defs.push_back({"normal-first-edge-between-no-loss", {}, {},
                  [] { return good_choice_claim(GoodChoice::kEdgeBetween); }});
  defs.push_back({"normal-first-far-corner-no-loss", {}, {},
                  [] { return good_choice_claim(GoodChoice::kFarCorner); }});
  defs.push_back({"normal-first-no-loss-all-candidates", {}, {}, [] {
                    return named(
                        verify_guarantee({normal_first(kShippedGoodChoice),
                                          Variant::kNormal, Seat::kFirst,
                                          Threshold::kNoLoss},
                                         {std::nullopt, true}),
                        "normal-first-no-loss-all-candidates",
                        "normal-first never loses for any tie-break among its "
                        "candidate moves",
                        false);
                  }});
  defs.push_back({"misere-mirror-no-loss", {}, {}, [] {
                    return named(verify_guarantee({spec_of(AgentKind::kMisereMirror),
                                                   Variant::kMisere, Seat::kFirst,
                                                   Threshold::kNoLoss}),
                                 "misere-mirror-no-loss",
                                 "misere-mirror (center, then mirror) never loses",
                                 true);
                  }});
  for (OpeningClass opening : {OpeningClass::kEdge, OpeningClass::kCorner}) {
    defs.push_back({"misere-" + to_string(opening) + "-opening-solver", {}, {},
                    [opening] { return misere_solver_claim(opening); }});
  }
  for (LabelMode mode : {LabelMode::kMarks, LabelMode::kLines}) {
    for (OpeningClass opening : {OpeningClass::kEdge, OpeningClass::kCorner}) {
      defs.push_back(
          {"misere-second-" + to_string(opening) + "-" + to_string(mode), mode,
           {}, [opening, mode] { return misere_second_claim(opening, mode); }});
    }
  }
  for (AgentMode mode : {AgentMode::kValidated, AgentMode::kPaper}) {
    const bool validated = mode == AgentMode::kValidated;
    const std::string base = "reverse-misere-" + to_string(mode) + "-win";
    defs.push_back({base, {}, mode, [mode, validated, base] {
                      return named(
                          verify_guarantee({spec_of(AgentKind::kReverseMisere, mode),
                                            Variant::kReverseMisere, Seat::kFirst,
                                            Threshold::kWin}),
                          base,
                          "reverse-misere (" + to_string(mode) +
                              " mode) always wins moving first",
                          validated);
                    }});
    defs.push_back({base + "-all-candidates", {}, mode, [mode, base] {
                      return named(
                          verify_guarantee({spec_of(AgentKind::kReverseMisere, mode),
                                            Variant::kReverseMisere, Seat::kFirst,
                                            Threshold::kWin},
                                           {std::nullopt, true}),
                          base + "-all-candidates",
                          "reverse-misere (" + to_string(mode) +
                              " mode) wins for every permitted choice, including "
                              "either far cell on move 2",
                          false);
                    }});
  }
  defs.push_back({"reverse-misere-no-draw", {}, {},
                  [] { return verify_reverse_no_draw(); }});
  return defs;
}

std::string cells_to_string(const std::vector<Cell>& cells) {
  std::string out;
  for (Cell c : cells) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

}  // namespace

std::string to_string(Threshold threshold) {
  return threshold == Threshold::kWin ? "win" : "no-loss";
}

std::string to_string(ClaimVerdict verdict) {
  return verdict == ClaimVerdict::kConfirmed ? "Confirmed" : "Refuted";
}

VerificationReport verify_guarantee(const Guarantee& guarantee,
                                    const TraversalOptions& options) {
  if (!is_deterministic(guarantee.agent.kind)) {
    throw NotVerifiable("the random agent is not a fixed policy");
  }
  check_compatible(guarantee.agent.kind, guarantee.variant, guarantee.seat);
  return Traversal(guarantee, options).run();
}

VerificationReport verify_conditional_win(const AgentSpec& agent,
                                          std::vector<Cell> reply_cells) {
  if (agent.kind != AgentKind::kNormalFirst) {
    throw AgentMisuse("conditional-win verification takes normal-first");
  }
  return verify_guarantee(
      {agent, Variant::kNormal, Seat::kFirst, Threshold::kWin},
      {std::move(reply_cells), false});
}

PunishmentReport verify_misere_punishment(LabelMode mode) {
  PunishmentReport out{mode, {}};
  AgentSpec second = spec_of(AgentKind::kMisereSecond);
  second.label_mode = mode;
  for (OpeningClass opening : {OpeningClass::kEdge, OpeningClass::kCorner}) {
    const GameValue truth =
        solve(apply_move(GameState(Variant::kMisere), representative(opening)));
    VerificationReport agent = verify_guarantee(
        {second, Variant::kMisere, Seat::kSecond, Threshold::kWin},
        {opening == OpeningClass::kEdge ? kEdges : kCorners, false});
    out.entries.push_back({opening, truth, std::move(agent)});
  }
  return out;
}

VerificationReport verify_dual_oracle(Variant variant) {
  const auto retro = build_retrograde_table(variant);
  VerificationReport report;
  report.claim_id = "solver-dual-oracle-" + to_string(variant);
  report.description = "negamax and retrograde tables agree (" +
                       to_string(variant) + ")";
  report.required = true;
  std::size_t mismatches = 0;
  for (const auto& [code, value] : retro) {
    ++report.games_explored;
    const GameState state = decode_state(code);
    if (solve(state) != value) {
      if (!report.counterexample) report.counterexample = state.history();
      ++mismatches;
    }
  }
  if (retro.size() != shared_solver().size(variant)) ++mismatches;
  report.verdict =
      mismatches == 0 ? ClaimVerdict::kConfirmed : ClaimVerdict::kRefuted;
  report.note = std::to_string(retro.size()) + " canonical states, " +
                std::to_string(mismatches) + " mismatches";
  return report;
}

VerificationReport verify_reverse_no_draw() {
  VerificationReport report;
  report.claim_id = "reverse-misere-no-draw";
  report.description =
      "reverse misère: no game is drawn and none lasts beyond 7 moves";
  report.required = true;
  std::size_t longest = 0;
  std::function<void(const GameState&)> walk = [&](const GameState& state) {
    if (const auto outcome = terminal_status(state)) {
      ++report.games_explored;
      longest = std::max(longest, state.history().size());
      const bool bad = *outcome == Outcome::kDraw || state.history().size() > 7;
      if (bad && !report.counterexample) report.counterexample = state.history();
      return;
    }
    if (legal_moves(state).empty() && !report.counterexample) {
      report.counterexample = state.history();
    }
    for (Cell c : legal_moves(state)) walk(apply_move(state, c));
  };
  walk(GameState(Variant::kReverseMisere));
  report.verdict = report.counterexample ? ClaimVerdict::kRefuted
                                         : ClaimVerdict::kConfirmed;
  report.note = "longest game " + std::to_string(longest) + " moves";
  return report;
}

GoodChoice select_good_choice(bool edge_between_holds, bool far_corner_holds) {
  if (edge_between_holds && !far_corner_holds) return GoodChoice::kEdgeBetween;
  return GoodChoice::kFarCorner;
}

bool ClaimSuiteReport::required_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) {
    return !c.required || c.verdict == ClaimVerdict::kConfirmed;
  });
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const ClaimDef& def : claim_defs()) out.push_back(def.id);
  return out;
}

ClaimSuiteReport claim_suite(const ClaimFilter& filter) {
  ClaimSuiteReport suite;
  const auto defs = claim_defs();
  if (filter.claim_id &&
      std::none_of(defs.begin(), defs.end(),
                   [&](const ClaimDef& d) { return d.id == *filter.claim_id; })) {
    throw GameError("unknown claim: " + *filter.claim_id);
  }
  for (const ClaimDef& def : defs) {
    if (filter.claim_id && def.id != *filter.claim_id) continue;
    if (filter.label_mode && def.label_mode && *def.label_mode != *filter.label_mode) {
      continue;
    }
    if (filter.mode && def.mode && *def.mode != *filter.mode) continue;
    suite.claims.push_back(def.run());
  }
  for (Variant v :
       {Variant::kNormal, Variant::kMisere, Variant::kReverseMisere}) {
    suite.openings.push_back(opening_table(v));
  }
  const auto holds = [](GoodChoice choice) {
    return good_choice_claim(choice).verdict == ClaimVerdict::kConfirmed;
  };
  suite.shipped_good_choice = select_good_choice(holds(GoodChoice::kEdgeBetween),
                                                 holds(GoodChoice::kFarCorner));
  return suite;
}

Outcome replay_outcome(Variant variant, const std::vector<Cell>& moves) {
  GameState state(variant);
  for (Cell c : moves) state = apply_move(state, c);
  const auto outcome = terminal_status(state);
  if (!outcome) throw GameError("replayed game did not finish");
  return *outcome;
}

std::string format_text(const ClaimSuiteReport& report) {
  std::ostringstream out;
  out << "Opening values for the first player\n";
  for (const OpeningTable& table : report.openings) {
    out << "  " << to_string(table.variant) << ":";
    for (const auto& [opening, value] : table.entries) {
      out << "  " << to_string(opening) << "=" << to_string(value);
    }
    out << "\n";
  }
  out << "Shipped good choice: " << to_string(report.shipped_good_choice)
      << "\n\nClaims\n";
  for (const VerificationReport& claim : report.claims) {
    const bool failed_required =
        claim.required && claim.verdict == ClaimVerdict::kRefuted;
    out << (claim.verdict == ClaimVerdict::kConfirmed ? "  [CONFIRMED] "
                                                      : "  [REFUTED]   ")
        << claim.claim_id << (claim.required ? " (required)" : "") << "\n"
        << "      " << claim.description << "\n"
        << "      games explored: " << claim.games_explored;
    if (claim.worst_outcome) {
      out << ", worst outcome: " << to_string(*claim.worst_outcome);
    }
    out << "\n";
    if (!claim.note.empty()) out << "      " << claim.note << "\n";
    if (claim.counterexample) {
      out << "      counterexample: " << cells_to_string(*claim.counterexample)
          << "\n";
    }
    if (failed_required) out << "      !!! required claim failed\n";
  }
  out << "\n" << (report.required_hold() ? "All required claims hold.\n"
                                         : "REQUIRED CLAIMS FAILED.\n");
  return out.str();
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["claim_id"] = report.claim_id;
  j["description"] = report.description;
  j["required"] = report.required;
  j["verdict"] = to_string(report.verdict);
  j["games_explored"] = report.games_explored;
  j["worst_outcome"] = report.worst_outcome
                           ? nlohmann::json(to_string(*report.worst_outcome))
                           : nlohmann::json(nullptr);
  if (report.counterexample) {
    std::vector<int> cells;
    for (Cell c : *report.counterexample) cells.push_back(c.index());
    j["counterexample"] = cells;
  } else {
    j["counterexample"] = nullptr;
  }
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

nlohmann::json to_json(const ClaimSuiteReport& report) {
  nlohmann::json j;
  j["shipped_good_choice"] = to_string(report.shipped_good_choice);
  j["required_hold"] = report.required_hold();
  j["claims"] = nlohmann::json::array();
  for (const auto& claim : report.claims) j["claims"].push_back(to_json(claim));
  j["opening_tables"] = nlohmann::json::array();
  for (const OpeningTable& table : report.openings) {
    nlohmann::json t;
    t["variant"] = to_string(table.variant);
    for (const auto& [opening, value] : table.entries) {
      t["entries"][to_string(opening)] = {{"verdict", to_string(value.verdict)},
                                          {"distance", value.distance}};
    }
    j["opening_tables"].push_back(t);
  }
  return j;
}

}  // namespace ttt
