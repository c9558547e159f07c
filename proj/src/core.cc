#include "ttt/core.h"

#include <algorithm>

namespace ttt {
namespace {

constexpr std::array<Line, 8> kLines = {{
    {Cell(1), Cell(2), Cell(3)},
    {Cell(4), Cell(5), Cell(6)},
    {Cell(7), Cell(8), Cell(9)},
    {Cell(1), Cell(4), Cell(7)},
    {Cell(2), Cell(5), Cell(8)},
    {Cell(3), Cell(6), Cell(9)},
    {Cell(1), Cell(5), Cell(9)},
    {Cell(3), Cell(5), Cell(7)},
}};

bool line_filled_with(const Board& board, const Line& line, Mark mark) {
  return std::all_of(line.begin(), line.end(),
                     [&](Cell c) { return board[c.offset()] == mark; });
}

bool has_line(const Board& board, Mark mark) {
  return std::any_of(kLines.begin(), kLines.end(), [&](const Line& line) {
    return line_filled_with(board, line, mark);
  });
}

bool has_any_line(const Board& board) {
  return has_line(board, Mark::kX) || has_line(board, Mark::kO);
}

}  // namespace

std::array<Cell, 9> all_cells() {
  return {Cell(1), Cell(2), Cell(3), Cell(4), Cell(5),
          Cell(6), Cell(7), Cell(8), Cell(9)};
}

std::string to_string(Cell cell) { return std::to_string(cell.index()); }

char to_char(Mark mark) {
  switch (mark) {
    case Mark::kX:
      return 'X';
    case Mark::kO:
      return 'O';
    case Mark::kEmpty:
      break;
  }
  return '.';
}

std::string to_string(Seat seat) {
  return seat == Seat::kFirst ? "first" : "second";
}

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::kNormal:
      return "normal";
    case Variant::kMisere:
      return "misere";
    case Variant::kReverseMisere:
      return "reverse-misere";
  }
  return "?";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kFirstWins:
      return "first-wins";
    case Outcome::kSecondWins:
      return "second-wins";
    case Outcome::kDraw:
      return "draw";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "normal" || name == "N") return Variant::kNormal;
  if (name == "misere" || name == "M") return Variant::kMisere;
  if (name == "reverse-misere" || name == "R") return Variant::kReverseMisere;
  throw GameError("unknown variant: " + std::string(name));
}

Seat parse_seat(std::string_view name) {
  if (name == "first" || name == "1") return Seat::kFirst;
  if (name == "second" || name == "2") return Seat::kSecond;
  throw GameError("unknown seat: " + std::string(name));
}

int outcome_score(Outcome outcome, Seat seat) {
  if (outcome == Outcome::kDraw) return 0;
  Seat winner = outcome == Outcome::kFirstWins ? Seat::kFirst : Seat::kSecond;
  return winner == seat ? 1 : -1;
}

const std::array<Line, 8>& lines() { return kLines; }

std::vector<Line> lines_through(Cell cell) {
  std::vector<Line> out;
  for (const Line& line : kLines) {
    if (std::find(line.begin(), line.end(), cell) != line.end()) {
      out.push_back(line);
    }
  }
  return out;
}

IllegalMove::IllegalMove(Cell cell, const std::string& why)
    : GameError("illegal move at cell " + to_string(cell) + ": " + why),
      cell_(cell) {}

ParseError::ParseError(std::size_t offset, const std::string& why)
    : GameError("parse error at offset " + std::to_string(offset) + ": " +
                why),
      offset_(offset) {}

GameState::GameState(Variant variant) : variant_(variant) {
  board_.fill(Mark::kEmpty);
  history_.reserve(9);
}

GameState GameState::from_board(Variant variant, const Board& board) {
  std::vector<Cell> xs, os;
  for (Cell c : all_cells()) {
    if (board[c.offset()] == Mark::kX) xs.push_back(c);
    if (board[c.offset()] == Mark::kO) os.push_back(c);
  }
  if (variant == Variant::kReverseMisere) {
    if (!os.empty()) throw GameError("reverse misère boards hold only X");
  } else if (xs.size() != os.size() && xs.size() != os.size() + 1) {
    throw GameError("mark counts inconsistent: X=" + std::to_string(xs.size()) +
                    " O=" + std::to_string(os.size()));
  }

  const int total = static_cast<int>(xs.size() + os.size());
  // Only the seat that moved last may own a completed line, and all of its
  // lines must share one cell whose removal leaves a line-free board.
  std::optional<Cell> last;
  if (total > 0 && has_any_line(board)) {
    const Seat last_mover = total % 2 == 1 ? Seat::kFirst : Seat::kSecond;
    const Mark mover_mark = mark_for(variant, last_mover);
    if (variant != Variant::kReverseMisere &&
        has_line(board, mover_mark == Mark::kX ? Mark::kO : Mark::kX)) {
      throw GameError("the seat to move already owns a completed line");
    }
    for (Cell c : (mover_mark == Mark::kX ? xs : os)) {
      Board without = board;
      without[c.offset()] = Mark::kEmpty;
      if (!has_any_line(without)) {
        last = c;
        break;
      }
    }
    if (!last) throw GameError("completed lines cannot come from one move");
    auto& pool = mover_mark == Mark::kX ? xs : os;
    pool.erase(std::find(pool.begin(), pool.end(), *last));
  }

  GameState state(variant);
  auto replay = [&](Cell c) {
    state.board_[c.offset()] = board[c.offset()];
    state.history_.push_back(c);
  };
  if (variant == Variant::kReverseMisere) {
    for (Cell c : xs) replay(c);
  } else {
    for (std::size_t i = 0; i < xs.size() || i < os.size(); ++i) {
      if (i < xs.size()) replay(xs[i]);
      if (i < os.size()) replay(os[i]);
    }
  }
  if (last) replay(*last);
  return state;
}

std::optional<Cell> GameState::last_move() const {
  if (history_.empty()) return std::nullopt;
  return history_.back();
}

std::string GameState::board_string() const {
  std::string out(9, '.');
  for (int i = 0; i < 9; ++i) out[i] = to_char(board_[i]);
  return out;
}

GameState GameState::transformed(int transform) const {
  GameState out(variant_);
  for (Cell c : history_) {
    Cell image = transform_cell(transform, c);
    out.board_[image.offset()] = board_[c.offset()];
    out.history_.push_back(image);
  }
  return out;
}

std::vector<Cell> legal_moves(const GameState& state) {
  std::vector<Cell> out;
  if (is_terminal(state)) return out;
  for (Cell c : all_cells()) {
    if (state.is_empty(c)) out.push_back(c);
  }
  return out;
}

GameState apply_move(const GameState& state, Cell cell) {
  if (!state.is_empty(cell)) throw IllegalMove(cell, "cell is occupied");
  if (is_terminal(state)) throw IllegalMove(cell, "game is over");
  GameState next = state;
  next.board_[cell.offset()] = mark_for(state.variant(), state.to_move());
  next.history_.push_back(cell);
  return next;
}

std::optional<Outcome> terminal_status(const GameState& state) {
  const Board& board = state.board();
  switch (state.variant()) {
    case Variant::kNormal:
      if (has_line(board, Mark::kX)) return Outcome::kFirstWins;
      if (has_line(board, Mark::kO)) return Outcome::kSecondWins;
      break;
    case Variant::kMisere:
      if (has_line(board, Mark::kX)) return Outcome::kSecondWins;
      if (has_line(board, Mark::kO)) return Outcome::kFirstWins;
      break;
    case Variant::kReverseMisere:
      // Whoever just moved made the line; the seat to move wins.
      if (has_line(board, Mark::kX)) {
        return state.to_move() == Seat::kFirst ? Outcome::kFirstWins
                                               : Outcome::kSecondWins;
      }
      return std::nullopt;
  }
  if (state.mark_count() == 9) return Outcome::kDraw;
  return std::nullopt;
}

bool completes_own_line(const GameState& state, Cell cell, Seat seat) {
  const Mark mark = mark_for(state.variant(), seat);
  for (const Line& line : kLines) {
    if (std::find(line.begin(), line.end(), cell) == line.end()) continue;
    bool complete = true;
    for (Cell c : line) {
      if (c != cell && state.at(c) != mark) complete = false;
    }
    if (complete) return true;
  }
  return false;
}

Cell mirror_cell(Cell cell) { return Cell(10 - cell.index()); }

int squared_distance(Cell a, Cell b) {
  const int dr = a.row() - b.row();
  const int dc = a.col() - b.col();
  return dr * dr + dc * dc;
}

std::vector<Cell> knight_targets(Cell cell) {
  if (cell.is_center()) {
    throw DomainError("the center has no cell at squared distance 5");
  }
  std::vector<Cell> out;
  for (Cell c : all_cells()) {
    if (squared_distance(cell, c) == 5) out.push_back(c);
  }
  return out;
}

Cell transform_cell(int transform, Cell cell) {
  const int r = cell.row();
  const int c = cell.col();
  switch (transform) {
    case 0:
      return cell;
    case 1:
      return Cell::from_row_col(c, 2 - r);
    case 2:
      return Cell::from_row_col(2 - r, 2 - c);
    case 3:
      return Cell::from_row_col(2 - c, r);
    case 4:
      return Cell::from_row_col(r, 2 - c);
    case 5:
      return Cell::from_row_col(2 - r, c);
    case 6:
      return Cell::from_row_col(c, r);
    case 7:
      return Cell::from_row_col(2 - c, 2 - r);
  }
  throw DomainError("transform id out of range: " + std::to_string(transform));
}

int inverse_transform(int transform) {
  if (transform == 1) return 3;
  if (transform == 3) return 1;
  return transform;
}

std::pair<GameState, int> canonicalize(const GameState& state) {
  int best = 0;
  std::string best_board = state.board_string();
  for (int t = 1; t < kTransformCount; ++t) {
    std::string board(9, '.');
    for (Cell c : all_cells()) {
      board[transform_cell(t, c).offset()] = to_char(state.at(c));
    }
    if (board < best_board) {
      best_board = std::move(board);
      best = t;
    }
  }
  return {state.transformed(best), best};
}

std::string encode_state(const GameState& state) {
  static constexpr char kVariantTag[] = {'N', 'M', 'R'};
  std::string out;
  out += kVariantTag[static_cast<int>(state.variant())];
  out += ':';
  out += state.to_move() == Seat::kFirst ? '1' : '2';
  out += ':';
  out += state.board_string();
  return out;
}

GameState decode_state(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty input");
  Variant variant;
  switch (text[0]) {
    case 'N':
      variant = Variant::kNormal;
      break;
    case 'M':
      variant = Variant::kMisere;
      break;
    case 'R':
      variant = Variant::kReverseMisere;
      break;
    default:
      throw ParseError(0, "variant must be one of N, M, R");
  }
  if (text.size() < 2 || text[1] != ':') throw ParseError(1, "expected ':'");
  if (text.size() < 3 || (text[2] != '1' && text[2] != '2')) {
    throw ParseError(2, "seat must be 1 or 2");
  }
  const Seat seat = text[2] == '1' ? Seat::kFirst : Seat::kSecond;
  if (text.size() < 4 || text[3] != ':') throw ParseError(3, "expected ':'");
  Board board;
  for (std::size_t i = 0; i < 9; ++i) {
    const std::size_t at = 4 + i;
    if (at >= text.size()) throw ParseError(at, "board needs 9 cells");
    switch (text[at]) {
      case '.':
        board[i] = Mark::kEmpty;
        break;
      case 'X':
        board[i] = Mark::kX;
        break;
      case 'O':
        if (variant == Variant::kReverseMisere) {
          throw ParseError(at, "reverse misère boards hold only X");
        }
        board[i] = Mark::kO;
        break;
      default:
        throw ParseError(at, "cell must be one of X, O, .");
    }
  }
  if (text.size() > 13) throw ParseError(13, "trailing characters");

  GameState state(variant);
  try {
    state = GameState::from_board(variant, board);
  } catch (const ParseError&) {
    throw;
  } catch (const GameError& e) {
    throw ParseError(4, e.what());
  }
  if (state.to_move() != seat) {
    throw ParseError(2, "seat to move inconsistent with mark counts");
  }
  return state;
}

std::string render_board(const GameState& state) {
  std::string out;
  for (int row = 0; row < 3; ++row) {
    if (row > 0) out += "---+---+---\n";
    for (int col = 0; col < 3; ++col) {
      const Cell c = Cell::from_row_col(row, col);
      out += ' ';
      out += state.is_empty(c) ? static_cast<char>('0' + c.index())
                               : to_char(state.at(c));
      out += col < 2 ? " |" : "\n";
    }
  }
  return out;
}

}  // namespace ttt
