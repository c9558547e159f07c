#include "ttt/service.h"

#include <fstream>
#include <random>

#include "ttt/verifier.h"

namespace ttt {
namespace {

std::vector<int> indices(const std::vector<Cell>& cells) {
  std::vector<int> out;
  for (Cell c : cells) out.push_back(c.index());
  return out;
}

Outcome parse_outcome(const std::string& name) {
  for (Outcome o : {Outcome::kFirstWins, Outcome::kSecondWins, Outcome::kDraw}) {
    if (to_string(o) == name) return o;
  }
  throw GameError("unknown outcome: " + name);
}

SessionView view_of(const GameSession& session,
                    std::optional<Cell> engine_reply = std::nullopt) {
  return {session.id, session.state, session.engine, session.engine_seat,
          engine_reply, terminal_status(session.state)};
}

}  // namespace

nlohmann::json to_json(const SessionView& view) {
  nlohmann::json j;
  j["id"] = view.id;
  j["variant"] = to_string(view.state.variant());
  j["engine"] = agent_name(view.engine.kind);
  j["engine_seat"] = to_string(view.engine_seat);
  j["human_seat"] = to_string(opponent(view.engine_seat));
  j["state"] = encode_state(view.state);
  j["board"] = view.state.board_string();
  j["to_move"] = to_string(view.state.to_move());
  j["history"] = indices(view.state.history());
  if (view.engine_reply) j["engine_reply"] = view.engine_reply->index();
  if (view.outcome) j["outcome"] = to_string(*view.outcome);
  return j;
}

nlohmann::json to_json(const GameRecord& record) {
  return {{"id", record.id},
          {"variant", to_string(record.variant)},
          {"agent", record.agent},
          {"engine_seat", to_string(record.engine_seat)},
          {"moves", indices(record.moves)},
          {"outcome", to_string(record.outcome)},
          {"duration_ms", record.duration_ms}};
}

GameRecord record_from_json(const nlohmann::json& j) {
  GameRecord r;
  r.id = j.at("id").get<std::string>();
  r.variant = parse_variant(j.at("variant").get<std::string>());
  r.agent = j.at("agent").get<std::string>();
  r.engine_seat = parse_seat(j.at("engine_seat").get<std::string>());
  for (int index : j.at("moves").get<std::vector<int>>()) {
    r.moves.push_back(Cell(index));
  }
  r.outcome = parse_outcome(j.at("outcome").get<std::string>());
  r.duration_ms = j.at("duration_ms").get<std::int64_t>();
  return r;
}

void FileRecordSink::append(const GameRecord& record) {
  std::lock_guard lock(mutex_);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw GameError("cannot open record file " + path_);
  out << to_json(record).dump() << '\n';
}

void MemoryRecordSink::append(const GameRecord& record) {
  std::lock_guard lock(mutex_);
  records_.push_back(record);
}

std::vector<GameRecord> MemoryRecordSink::records() const {
  std::lock_guard lock(mutex_);
  return records_;
}

void MemorySessionStore::insert(std::shared_ptr<Entry> entry) {
  std::lock_guard lock(mutex_);
  entries_[entry->session.id] = std::move(entry);
}

std::shared_ptr<SessionStore::Entry> MemorySessionStore::find(
    const std::string& id) const {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : it->second;
}

std::string new_session_id() {
  static thread_local std::random_device device;
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  for (int i = 0; i < 4; ++i) {
    std::uint32_t word = device();
    for (int k = 0; k < 8; ++k, word >>= 4) id += kHex[word & 0xf];
  }
  return id;
}

GameService::GameService(std::shared_ptr<RecordSink> records,
                         std::unique_ptr<SessionStore> store)
    : records_(std::move(records)), store_(std::move(store)) {
  if (!store_) store_ = std::make_unique<MemorySessionStore>();
}

SessionView GameService::create_game(Variant variant, const AgentSpec& engine,
                                     Seat engine_seat) {
  try {
    check_compatible(engine.kind, variant, engine_seat);
  } catch (const AgentMisuse& e) {
    throw ServiceError(422, e.what());
  }
  auto entry = std::make_shared<SessionStore::Entry>();
  GameSession& session = entry->session;
  session.id = new_session_id();
  session.state = GameState(variant);
  session.engine = engine;
  session.engine_seat = engine_seat;
  session.created = session.updated = Clock::now();

  std::optional<Cell> reply;
  if (engine_seat == Seat::kFirst) {
    reply = choose_move(session.state, engine);
    session.state = apply_move(session.state, *reply);
  }
  SessionView view = view_of(session, reply);
  store_->insert(std::move(entry));
  return view;
}

std::shared_ptr<SessionStore::Entry> GameService::lookup(
    const std::string& id) const {
  auto entry = store_->find(id);
  if (!entry) throw ServiceError(404, "no game with id " + id);
  return entry;
}

SessionView GameService::get(const std::string& id) const {
  auto entry = lookup(id);
  std::lock_guard lock(entry->mutex);
  return view_of(entry->session);
}

SessionView GameService::submit_move(const std::string& id, Cell cell) {
  auto entry = lookup(id);
  std::lock_guard lock(entry->mutex);
  GameSession& session = entry->session;
  if (is_terminal(session.state)) {
    throw ServiceError(409, "game is over");
  }
  if (session.state.to_move() == session.engine_seat) {
    throw ServiceError(409, "it is not the human's turn");
  }
  GameState next = session.state;
  try {
    next = apply_move(session.state, cell);
  } catch (const IllegalMove& e) {
    throw ServiceError(409, e.what());
  }
  std::optional<Cell> reply;
  if (!is_terminal(next)) {
    reply = choose_move(next, session.engine);
    next = apply_move(next, *reply);
  }
  session.state = std::move(next);
  session.updated = Clock::now();
  if (is_terminal(session.state)) finish(session);
  return view_of(session, reply);
}

void GameService::finish(const GameSession& session) {
  if (!records_) return;
  GameRecord record;
  record.id = session.id;
  record.variant = session.state.variant();
  record.agent = agent_name(session.engine.kind);
  record.engine_seat = session.engine_seat;
  record.moves = session.state.history();
  record.outcome = *terminal_status(session.state);
  record.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           session.updated - session.created)
                           .count();
  if (replay_outcome(record.variant, record.moves) != record.outcome) {
    throw GameError("record for " + record.id + " does not replay");
  }
  records_->append(record);
}

std::map<Cell, GameValue> GameService::hint(const std::string& id) const {
  auto entry = lookup(id);
  std::lock_guard lock(entry->mutex);
  std::map<Cell, GameValue> out;
  const GameState& state = entry->session.state;
  for (Cell c : legal_moves(state)) {
    const GameValue child = solve(apply_move(state, c));
    out[c] = {negate(child).verdict, child.distance};
  }
  return out;
}

const nlohmann::json& GameService::claims() {
  std::call_once(claims_once_, [this] { claims_ = to_json(claim_suite()); });
  return claims_;
}

}  // namespace ttt
