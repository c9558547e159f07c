#include <set>

#include "ttt/solver.h"

namespace ttt {
namespace {

// Canonical states grouped by number of marks; layer k holds every canonical
// state reachable after k plies.
std::vector<std::set<std::string>> canonical_layers(Variant variant) {
  std::vector<std::set<std::string>> layers(10);
  layers[0].insert(encode_state(GameState(variant)));
  for (int k = 0; k < 9; ++k) {
    for (const std::string& code : layers[k]) {
      const GameState state = decode_state(code);
      for (Cell move : legal_moves(state)) {
        layers[k + 1].insert(
            encode_state(canonicalize(apply_move(state, move)).first));
      }
    }
  }
  return layers;
}

// Larger is better for the seat to move.
int preference(const GameValue& v) {
  switch (v.verdict) {
    case Verdict::kWin:
      return 200 - v.distance;
    case Verdict::kLoss:
      return -200 + v.distance;
    case Verdict::kDraw:
      break;
  }
  return 0;
}

}  // namespace

std::vector<GameState> reachable_canonical_states(Variant variant) {
  std::set<std::string> all;
  for (const auto& layer : canonical_layers(variant)) {
    all.insert(layer.begin(), layer.end());
  }
  std::vector<GameState> out;
  out.reserve(all.size());
  for (const std::string& code : all) out.push_back(decode_state(code));
  return out;
}

std::map<std::string, GameValue> build_retrograde_table(Variant variant) {
  const auto layers = canonical_layers(variant);
  std::map<std::string, GameValue> table;
  for (int k = 9; k >= 0; --k) {
    for (const std::string& code : layers[k]) {
      const GameState state = decode_state(code);
      if (const auto outcome = terminal_status(state)) {
        const int score = outcome_score(*outcome, state.to_move());
        table[code] = {score > 0   ? Verdict::kWin
                       : score < 0 ? Verdict::kLoss
                                   : Verdict::kDraw,
                       0};
        continue;
      }
      GameValue best{Verdict::kLoss, 0};
      int best_pref = -1000;
      for (Cell move : legal_moves(state)) {
        const std::string child =
            encode_state(canonicalize(apply_move(state, move)).first);
        const GameValue c = table.at(child);
        GameValue mine{c.verdict == Verdict::kWin    ? Verdict::kLoss
                       : c.verdict == Verdict::kLoss ? Verdict::kWin
                                                     : Verdict::kDraw,
                       c.distance + 1};
        if (preference(mine) > best_pref) {
          best_pref = preference(mine);
          best = mine;
        }
      }
      table[code] = best;
    }
  }
  return table;
}

}  // namespace ttt
