#ifndef TTT_LABELS_H_
#define TTT_LABELS_H_

#include <map>
#include <string>

#include "ttt/core.h"

namespace ttt {

// How a cell's label is accumulated over the live lines through it:
//   kMarks - sum of the perspective seat's marks on those lines,
//   kLines - number of those lines holding at least one such mark.
// A line is live when it holds no opposing mark.
enum class LabelMode { kMarks, kLines };

std::string to_string(LabelMode mode);
LabelMode parse_label_mode(std::string_view name);

struct LabelGrid {
  Seat perspective;
  std::map<Cell, int> labels;  // empty cells only

  int at(Cell cell) const { return labels.at(cell); }
};

// In reverse misère both seats share X, so every X counts for either
// perspective and no line is ever dead.
LabelGrid label_grid(const GameState& state, Seat perspective,
                     LabelMode mode = LabelMode::kMarks);

class NoSafeMove : public GameError {
 public:
  NoSafeMove() : GameError("every empty cell completes the mover's own line") {}
};

// Highest label for the mover's own marks. Outside the normal variant, cells
// that would complete the mover's own line are skipped. Lowest index wins
// ties. Throws NoSafeMove when nothing survives the filter.
Cell clever_choice(const GameState& state, Seat mover,
                   LabelMode mode = LabelMode::kMarks);

// Lowest label for the opponent's marks, skipping self-completing cells.
// Lowest index wins ties. Throws NoSafeMove when nothing survives.
Cell avoidance_choice(const GameState& state, Seat mover,
                      LabelMode mode = LabelMode::kMarks);

// Every cell that ties for the clever/avoidance choice, ascending.
std::vector<Cell> clever_candidates(const GameState& state, Seat mover,
                                    LabelMode mode);
std::vector<Cell> avoidance_candidates(const GameState& state, Seat mover,
                                       LabelMode mode);

}  // namespace ttt

#endif  // TTT_LABELS_H_
