#include <cstdio>
#include <fstream>
#include <random>
#include <thread>

#include "doctest.h"
#include "test_util.h"
#include "ttt/service.h"
#include "ttt/verifier.h"

namespace ttt {
namespace {

AgentSpec engine(AgentKind kind, std::uint64_t seed = 0) {
  AgentSpec s;
  s.kind = kind;
  s.seed = seed;
  return s;
}

int status_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ServiceError& e) {
    return e.status();
  }
  return 0;
}

TEST_CASE("create game") {
  GameService service;
  const SessionView mirror = service.create_game(
      Variant::kMisere, engine(AgentKind::kMisereMirror), Seat::kFirst);
  CHECK(encode_state(mirror.state) == "M:2:....X....");
  CHECK(mirror.engine_reply == kCenter);

  const SessionView perfect = service.create_game(
      Variant::kNormal, engine(AgentKind::kPerfect), Seat::kSecond);
  CHECK(encode_state(perfect.state) == "N:1:.........");
  CHECK_FALSE(perfect.engine_reply.has_value());

  CHECK(status_of([&] {
          service.create_game(Variant::kMisere, engine(AgentKind::kNormalFirst),
                              Seat::kFirst);
        }) == 422);
  CHECK(status_of([&] {
          service.create_game(Variant::kMisere,
                              engine(AgentKind::kMisereSecond), Seat::kFirst);
        }) == 422);
  CHECK(mirror.id != perfect.id);
  CHECK(mirror.id.size() == 32);
}

TEST_CASE("submit move") {
  GameService service;
  const std::string id =
      service
          .create_game(Variant::kMisere, engine(AgentKind::kMisereMirror),
                       Seat::kFirst)
          .id;
  const SessionView after = service.submit_move(id, Cell(1));
  CHECK(after.engine_reply == Cell(9));
  CHECK(encode_state(after.state) == "M:2:O...X...X");

  CHECK(status_of([&] { service.submit_move(id, Cell(5)); }) == 409);
  CHECK(service.get(id).state == after.state);
  CHECK(status_of([&] { service.submit_move("feed", Cell(2)); }) == 404);
  CHECK(status_of([&] { service.get("feed"); }) == 404);
}

TEST_CASE("a finishing human move gets no engine reply") {
  auto sink = std::make_shared<MemoryRecordSink>();
  GameService service(sink);
  bool human_won = false;
  for (std::uint64_t seed = 0; seed < 200 && !human_won; ++seed) {
    SessionView v = service.create_game(
        Variant::kNormal, engine(AgentKind::kRandom, seed), Seat::kSecond);
    // Go for the top row, then anything.
    while (!v.outcome) {
      std::optional<Cell> pick;
      for (int i : {1, 2, 3, 4, 5, 6, 7, 8, 9}) {
        if (v.state.is_empty(Cell(i))) {
          pick = Cell(i);
          break;
        }
      }
      const SessionView next = service.submit_move(v.id, *pick);
      if (next.outcome && next.state.history().back() == *pick) {
        CHECK_FALSE(next.engine_reply.has_value());
        if (*next.outcome == Outcome::kFirstWins) human_won = true;
      }
      v = next;
    }
    CHECK(status_of([&] { service.submit_move(v.id, Cell(1)); }) == 409);
    CHECK(service.hint(v.id).empty());
  }
  CHECK(human_won);
  for (const GameRecord& r : sink->records()) {
    CHECK(replay_outcome(r.variant, r.moves) == r.outcome);
    CHECK(r.agent == "random");
    CHECK(r.engine_seat == Seat::kSecond);
  }
  CHECK_FALSE(sink->records().empty());
}

TEST_CASE("hints") {
  GameService service;
  const std::string normal =
      service
          .create_game(Variant::kNormal, engine(AgentKind::kPerfect),
                       Seat::kSecond)
          .id;
  const auto hints = service.hint(normal);
  CHECK(hints.size() == 9);
  for (const auto& [cell, value] : hints) {
    CHECK(value.verdict == Verdict::kDraw);
    CHECK(value.distance == 8);
  }

  // Human X holds 1 and 2 after the engine blocked elsewhere: cell 3 wins.
  const std::string id =
      service
          .create_game(Variant::kNormal, engine(AgentKind::kRandom, 5),
                       Seat::kSecond)
          .id;
  SessionView v = service.submit_move(id, Cell(1));
  const Cell second = v.state.is_empty(Cell(2)) ? Cell(2) : Cell(4);
  const Cell third = second == Cell(2) ? Cell(3) : Cell(7);
  v = service.submit_move(id, second);
  if (!v.outcome && v.state.is_empty(third)) {
    const auto h = service.hint(id);
    CHECK(h.at(third) == GameValue{Verdict::kWin, 0});
  }
}

TEST_CASE("file records") {
  const std::string path = "service_test_records.jsonl";
  std::remove(path.c_str());
  auto sink = std::make_shared<FileRecordSink>(path);
  GameService service(sink);
  SessionView v = service.create_game(
      Variant::kMisere, engine(AgentKind::kMisereMirror), Seat::kFirst);
  for (int c : {1, 2, 3, 4, 6, 7, 8, 9}) {
    if (v.outcome) break;
    if (v.state.is_empty(Cell(c))) v = service.submit_move(v.id, Cell(c));
  }
  REQUIRE(v.outcome.has_value());
  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  const GameRecord r = record_from_json(nlohmann::json::parse(line));
  CHECK(r.id == v.id);
  CHECK(r.variant == Variant::kMisere);
  CHECK(r.agent == "misere-mirror");
  CHECK(r.moves == v.state.history());
  CHECK(r.outcome == *v.outcome);
  CHECK(to_json(r) == nlohmann::json::parse(line));
  CHECK_FALSE(std::getline(in, line));
  std::remove(path.c_str());
}

TEST_CASE("fuzzed request sequences never corrupt a session") {
  GameService service;
  std::mt19937 rng(1234);
  const AgentKind kinds[] = {AgentKind::kPerfect, AgentKind::kRandom};
  for (int game = 0; game < 300; ++game) {
    const Variant v = testing::kVariants[rng() % 3];
    const Seat seat = rng() % 2 ? Seat::kFirst : Seat::kSecond;
    const SessionView created =
        service.create_game(v, engine(kinds[rng() % 2], rng()), seat);
    for (int step = 0; step < 20; ++step) {
      const Cell c(1 + static_cast<int>(rng() % 9));
      const int status = status_of([&] { service.submit_move(created.id, c); });
      CHECK((status == 0 || status == 409));
      const SessionView now = service.get(created.id);
      const GameState decoded = decode_state(encode_state(now.state));
      CHECK(decoded.board() == now.state.board());
      GameState replay(v);
      for (Cell m : now.state.history()) replay = apply_move(replay, m);
      CHECK(replay.board() == now.state.board());
    }
  }
}

TEST_CASE("sessions are served concurrently") {
  GameService service;
  std::vector<std::string> ids;
  for (int i = 0; i < 8; ++i) {
    ids.push_back(service
                      .create_game(Variant::kNormal,
                                   engine(AgentKind::kRandom, i), Seat::kSecond)
                      .id);
  }
  std::vector<std::thread> threads;
  for (int t = 0; t < 16; ++t) {
    threads.emplace_back([&, t] {
      std::mt19937 rng(t);
      for (int k = 0; k < 200; ++k) {
        const auto& id = ids[rng() % ids.size()];
        try {
          service.submit_move(id, Cell(1 + static_cast<int>(rng() % 9)));
        } catch (const ServiceError&) {
        }
        service.hint(id);
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& id : ids) {
    const SessionView v = service.get(id);
    GameState replay(Variant::kNormal);
    for (Cell m : v.state.history()) replay = apply_move(replay, m);
    CHECK(replay.board() == v.state.board());
  }
}

TEST_CASE("session view json") {
  GameService service;
  const SessionView v = service.create_game(
      Variant::kMisere, engine(AgentKind::kMisereMirror), Seat::kFirst);
  const auto j = to_json(v);
  CHECK(j["state"] == "M:2:....X....");
  CHECK(j["to_move"] == "second");
  CHECK(j["engine_reply"] == 5);
  CHECK(j["engine"] == "misere-mirror");
  CHECK(j["human_seat"] == "second");
  CHECK_FALSE(j.contains("outcome"));
  CHECK(encode_state(decode_state(j["state"].get<std::string>())) == j["state"]);
}

}  // namespace
}  // namespace ttt
