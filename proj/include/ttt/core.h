#ifndef TTT_CORE_H_
#define TTT_CORE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ttt {

class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of a geometric helper.
class DomainError : public GameError {
 public:
  using GameError::GameError;
};

// A grid cell addressed 1..9 in row-major order:
//
//   1 2 3
//   4 5 6
//   7 8 9
class Cell {
 public:
  constexpr explicit Cell(int index) : index_(index) {
    if (index < 1 || index > 9) {
      throw DomainError("cell index out of range: " + std::to_string(index));
    }
  }
  static constexpr Cell from_row_col(int row, int col) {
    return Cell(3 * row + col + 1);
  }
  static constexpr Cell from_offset(int offset) { return Cell(offset + 1); }

  constexpr int index() const { return index_; }
  constexpr int offset() const { return index_ - 1; }
  constexpr int row() const { return (index_ - 1) / 3; }
  constexpr int col() const { return (index_ - 1) % 3; }

  constexpr bool is_center() const { return index_ == 5; }
  constexpr bool is_corner() const {
    return index_ == 1 || index_ == 3 || index_ == 7 || index_ == 9;
  }
  constexpr bool is_edge() const { return index_ % 2 == 0; }

  friend constexpr auto operator<=>(Cell, Cell) = default;

 private:
  int index_;
};

inline constexpr Cell kCenter{5};

std::array<Cell, 9> all_cells();
std::string to_string(Cell cell);

enum class Mark : std::uint8_t { kEmpty, kX, kO };
enum class Seat : std::uint8_t { kFirst, kSecond };
enum class Variant : std::uint8_t { kNormal, kMisere, kReverseMisere };
enum class Outcome : std::uint8_t { kFirstWins, kSecondWins, kDraw };

constexpr Seat opponent(Seat seat) {
  return seat == Seat::kFirst ? Seat::kSecond : Seat::kFirst;
}

// Mark placed by `seat`. Both seats place X in reverse misère.
constexpr Mark mark_for(Variant variant, Seat seat) {
  if (variant == Variant::kReverseMisere) return Mark::kX;
  return seat == Seat::kFirst ? Mark::kX : Mark::kO;
}

char to_char(Mark mark);
std::string to_string(Seat seat);
std::string to_string(Variant variant);
std::string to_string(Outcome outcome);

// Long variant names as used on the wire: "normal", "misere",
// "reverse-misere". Throws GameError on anything else.
Variant parse_variant(std::string_view name);
Seat parse_seat(std::string_view name);

// Outcome seen from `seat`: +1 win, 0 draw, -1 loss.
int outcome_score(Outcome outcome, Seat seat);

using Line = std::array<Cell, 3>;

// The 8 winning lines: rows, then columns, then the two diagonals.
const std::array<Line, 8>& lines();
std::vector<Line> lines_through(Cell cell);

using Board = std::array<Mark, 9>;

class IllegalMove : public GameError {
 public:
  IllegalMove(Cell cell, const std::string& why);
  Cell cell() const { return cell_; }

 private:
  Cell cell_;
};

class ParseError : public GameError {
 public:
  ParseError(std::size_t offset, const std::string& why);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Immutable game position. Seat to move is First iff the number of marks on
// the board is even, which covers both the X/O count rule and the reverse
// misère parity rule. The history always replays from the empty board to the
// current board.
class GameState {
 public:
  explicit GameState(Variant variant = Variant::kNormal);

  // Builds a state from a bare board, synthesizing a legal history. Throws
  // GameError when the board cannot arise from legal play.
  static GameState from_board(Variant variant, const Board& board);

  Variant variant() const { return variant_; }
  const Board& board() const { return board_; }
  Mark at(Cell cell) const { return board_[cell.offset()]; }
  bool is_empty(Cell cell) const { return at(cell) == Mark::kEmpty; }
  const std::vector<Cell>& history() const { return history_; }
  int mark_count() const { return static_cast<int>(history_.size()); }
  Seat to_move() const {
    return history_.size() % 2 == 0 ? Seat::kFirst : Seat::kSecond;
  }
  std::optional<Cell> last_move() const;

  // Returns the board as 9 chars over {'.', 'O', 'X'}.
  std::string board_string() const;

  GameState transformed(int transform) const;

  friend bool operator==(const GameState& a, const GameState& b) {
    return a.variant_ == b.variant_ && a.board_ == b.board_ &&
           a.history_.size() == b.history_.size();
  }

 private:
  friend GameState apply_move(const GameState& state, Cell cell);

  Variant variant_;
  Board board_{};
  std::vector<Cell> history_;
};

std::vector<Cell> legal_moves(const GameState& state);
GameState apply_move(const GameState& state, Cell cell);
std::optional<Outcome> terminal_status(const GameState& state);
inline bool is_terminal(const GameState& state) {
  return terminal_status(state).has_value();
}

// True when `seat` placing a mark at `cell` would put a completed line of
// that seat's mark on the board. In reverse misère any X line counts.
bool completes_own_line(const GameState& state, Cell cell, Seat seat);

// Point reflection through the center.
Cell mirror_cell(Cell cell);

// Cells at squared distance 5 (a knight's move). Throws DomainError for the
// center, which has none.
std::vector<Cell> knight_targets(Cell cell);

int squared_distance(Cell a, Cell b);

// Dihedral transforms, ids 0..7: identity, rotations by 90/180/270 degrees
// clockwise, mirror left-right, mirror top-bottom, main-diagonal transpose,
// anti-diagonal transpose.
inline constexpr int kTransformCount = 8;
Cell transform_cell(int transform, Cell cell);
int inverse_transform(int transform);

// Lexicographically smallest transformed board ('.' < 'O' < 'X') and the
// lowest transform id producing it.
std::pair<GameState, int> canonicalize(const GameState& state);

// "<V>:<S>:<B>", V in {N,M,R}, S in {1,2}, B nine chars over {X,O,.}.
std::string encode_state(const GameState& state);
GameState decode_state(std::string_view text);

// Renders the board as a 3x3 ASCII grid, empty cells showing their number.
std::string render_board(const GameState& state);

}  // namespace ttt

#endif  // TTT_CORE_H_
