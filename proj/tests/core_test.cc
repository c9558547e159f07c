#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_util.h"
#include "ttt/core.h"

namespace ttt {
namespace {

using testing::for_each_reachable;
using testing::kVariants;
using testing::play;

int lines_containing(Cell cell) {
  return static_cast<int>(lines_through(cell).size());
}

bool has_line(const std::vector<int>& cells) {
  for (const Line& l : lines()) {
    std::vector<int> idx = {l[0].index(), l[1].index(), l[2].index()};
    if (idx == cells) return true;
  }
  return false;
}

TEST_CASE("cell geometry") {
  for (int i = 1; i <= 9; ++i) {
    Cell c(i);
    CHECK(c.index() == 3 * c.row() + c.col() + 1);
  }
  CHECK(Cell(5).is_center());
  for (int i : {1, 3, 7, 9}) CHECK(Cell(i).is_corner());
  for (int i : {2, 4, 6, 8}) CHECK(Cell(i).is_edge());
  CHECK_THROWS_AS(Cell(0), DomainError);
  CHECK_THROWS_AS(Cell(10), DomainError);
}

TEST_CASE("lines") {
  CHECK(lines().size() == 8);
  CHECK(has_line({1, 2, 3}));
  CHECK(has_line({1, 5, 9}));
  CHECK(lines_containing(Cell(5)) == 4);
  CHECK(lines_containing(Cell(2)) == 2);
  for (int i : {1, 3, 7, 9}) CHECK(lines_containing(Cell(i)) == 3);
  for (int i : {2, 4, 6, 8}) CHECK(lines_containing(Cell(i)) == 2);
}

TEST_CASE("legal moves") {
  CHECK(legal_moves(GameState()).size() == 9);
  const auto after = legal_moves(play(Variant::kNormal, {5}));
  std::vector<int> idx;
  for (Cell c : after) idx.push_back(c.index());
  CHECK(idx == std::vector<int>{1, 2, 3, 4, 6, 7, 8, 9});
  const GameState full = play(Variant::kNormal, {1, 2, 3, 5, 4, 6, 8, 7, 9});
  CHECK(legal_moves(full).empty());
}

TEST_CASE("apply move") {
  const GameState empty(Variant::kNormal);
  const GameState s = apply_move(empty, Cell(5));
  CHECK(s.at(Cell(5)) == Mark::kX);
  CHECK(s.to_move() == Seat::kSecond);
  CHECK(empty.is_empty(Cell(5)));  // input untouched

  const GameState r = play(Variant::kReverseMisere, {5, 2});
  CHECK(r.at(Cell(5)) == Mark::kX);
  CHECK(r.at(Cell(2)) == Mark::kX);

  try {
    apply_move(s, Cell(5));
    FAIL("expected IllegalMove");
  } catch (const IllegalMove& e) {
    CHECK(e.cell() == Cell(5));
  }
  const GameState won = play(Variant::kNormal, {1, 4, 2, 5, 3});
  CHECK_THROWS_AS(apply_move(won, Cell(9)), IllegalMove);
}

TEST_CASE("terminal status") {
  // O completes 1-5-9.
  const GameState normal = play(Variant::kNormal, {2, 1, 3, 5, 4, 9});
  CHECK(terminal_status(normal) == Outcome::kSecondWins);
  const GameState misere = play(Variant::kMisere, {2, 1, 3, 5, 4, 9});
  CHECK(terminal_status(misere) == Outcome::kFirstWins);
  // First completes the top row with the last X.
  const GameState reverse = play(Variant::kReverseMisere, {1, 2, 3});
  CHECK(terminal_status(reverse) == Outcome::kSecondWins);
  const GameState reverse2 = play(Variant::kReverseMisere, {1, 5, 4, 7});
  CHECK(terminal_status(reverse2) == Outcome::kFirstWins);

  const GameState draw = play(Variant::kNormal, {1, 2, 3, 5, 4, 6, 8, 7, 9});
  CHECK(terminal_status(draw) == Outcome::kDraw);
  CHECK_FALSE(terminal_status(GameState()).has_value());
}

TEST_CASE("mirror cell") {
  CHECK(mirror_cell(Cell(1)) == Cell(9));
  CHECK(mirror_cell(Cell(5)) == Cell(5));
  CHECK(mirror_cell(Cell(3)) == Cell(7));
  for (Cell c : all_cells()) CHECK(mirror_cell(mirror_cell(c)) == c);
}

TEST_CASE("knight targets") {
  CHECK(knight_targets(Cell(2)) == std::vector<Cell>{Cell(7), Cell(9)});
  CHECK(knight_targets(Cell(3)) == std::vector<Cell>{Cell(4), Cell(8)});
  CHECK_THROWS_AS(knight_targets(Cell(5)), DomainError);
  for (Cell c : all_cells()) {
    if (c.is_center()) continue;
    const auto targets = knight_targets(c);
    CHECK(targets.size() == 2);
    for (Cell t : targets) {
      const auto back = knight_targets(t);
      CHECK(std::find(back.begin(), back.end(), c) != back.end());
    }
  }
}

TEST_CASE("canonicalize") {
  const auto [empty, t0] = canonicalize(GameState());
  CHECK(empty.board_string() == ".........");
  CHECK(t0 == 0);

  const GameState diag = GameState::from_board(
      Variant::kReverseMisere, {Mark::kX, Mark::kEmpty, Mark::kEmpty,
                                Mark::kEmpty, Mark::kEmpty, Mark::kEmpty,
                                Mark::kEmpty, Mark::kEmpty, Mark::kX});
  const GameState anti = GameState::from_board(
      Variant::kReverseMisere, {Mark::kEmpty, Mark::kEmpty, Mark::kX,
                                Mark::kEmpty, Mark::kEmpty, Mark::kEmpty,
                                Mark::kX, Mark::kEmpty, Mark::kEmpty});
  CHECK(canonicalize(diag).first.board_string() ==
        canonicalize(anti).first.board_string());

  std::set<std::string> edge_forms;
  for (int e : {2, 4, 6, 8}) {
    edge_forms.insert(
        canonicalize(play(Variant::kNormal, {e})).first.board_string());
  }
  CHECK(edge_forms.size() == 1);
}

TEST_CASE("transforms form the dihedral group") {
  for (int t = 0; t < kTransformCount; ++t) {
    std::set<Cell> image;
    for (Cell c : all_cells()) {
      image.insert(transform_cell(t, c));
      CHECK(transform_cell(inverse_transform(t), transform_cell(t, c)) == c);
    }
    CHECK(image.size() == 9);
    CHECK(transform_cell(t, kCenter) == kCenter);
    // Lines map onto lines.
    for (const Line& l : lines()) {
      std::vector<int> mapped;
      for (Cell c : l) mapped.push_back(transform_cell(t, c).index());
      std::sort(mapped.begin(), mapped.end());
      CHECK(has_line(mapped));
    }
  }
}

TEST_CASE("encode and decode") {
  CHECK(encode_state(GameState()) == "N:1:.........");
  const GameState r = decode_state("R:2:....X....");
  CHECK(r.variant() == Variant::kReverseMisere);
  CHECK(r.to_move() == Seat::kSecond);
  CHECK(r.at(Cell(5)) == Mark::kX);

  const auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      decode_state(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 999;
  };
  CHECK(offset_of("N:1:XX.......") == 4);
  CHECK(offset_of("N:2:X........") == 999);
  CHECK(offset_of("N:1:X........") == 2);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("Q:1:.........") == 0);
  CHECK(offset_of("N-1:.........") == 1);
  CHECK(offset_of("N:3:.........") == 2);
  CHECK(offset_of("N:1:...") == 7);
  CHECK(offset_of("N:1:..Z......") == 6);
  CHECK(offset_of("R:1:O........") == 4);
  CHECK(offset_of("N:1:.........x") == 13);
  // Both seats own a line: unreachable.
  CHECK(offset_of("N:2:XXXOOO...") == 4);
  // X to move but X has a line; O moved last.
  CHECK(offset_of("N:1:XXXOO.O..") == 4);
}

TEST_CASE("exhaustive state properties") {
  std::size_t total = 0;
  for (Variant v : kVariants) {
    for_each_reachable(v, [&](const GameState& s) {
      ++total;
      // History replays to the board.
      GameState replay(v);
      for (Cell c : s.history()) replay = apply_move(replay, c);
      REQUIRE(replay.board() == s.board());
      REQUIRE(s.mark_count() == static_cast<int>(s.history().size()));

      // Mark parity.
      int xs = 0, os = 0;
      for (Mark m : s.board()) {
        xs += m == Mark::kX;
        os += m == Mark::kO;
      }
      if (v == Variant::kReverseMisere) {
        REQUIRE(os == 0);
        REQUIRE((s.to_move() == Seat::kFirst) == (xs % 2 == 0));
      } else {
        REQUIRE((xs - os == 0 || xs - os == 1));
        REQUIRE((s.to_move() == Seat::kFirst) == (xs == os));
      }

      // Wire round trip, including a legal synthesized history.
      const GameState decoded = decode_state(encode_state(s));
      REQUIRE(decoded == s);
      REQUIRE(encode_state(decoded) == encode_state(s));
      REQUIRE(terminal_status(decoded) == terminal_status(s));
      GameState replay2(v);
      for (Cell c : decoded.history()) replay2 = apply_move(replay2, c);
      REQUIRE(replay2.board() == decoded.board());

      // Terminal states are stable.
      if (terminal_status(s)) REQUIRE(legal_moves(s).empty());

      // Canonical form: idempotent and shared by the whole orbit.
      const auto [canon, t] = canonicalize(s);
      REQUIRE(s.transformed(t).board() == canon.board());
      REQUIRE(canonicalize(canon).first.board() == canon.board());
      for (int k = 0; k < kTransformCount; ++k) {
        REQUIRE(canonicalize(s.transformed(k)).first.board() == canon.board());
      }
      if (v == Variant::kReverseMisere) {
        REQUIRE(terminal_status(s) != Outcome::kDraw);
        REQUIRE(s.mark_count() <= 7);
      }
    });
  }
  // 5478 for both X/O variants; 450 reverse misère boards, counted
  // independently by enumerating X subsets that are line-free or become
  // line-free after removing one cell.
  CHECK(total == 5478 * 2 + 450);
}

TEST_CASE("render board") {
  const std::string text = render_board(play(Variant::kNormal, {5, 1}));
  CHECK(text ==
        " O | 2 | 3\n"
        "---+---+---\n"
        " 4 | X | 6\n"
        "---+---+---\n"
        " 7 | 8 | 9\n");
}

}  // namespace
}  // namespace ttt
