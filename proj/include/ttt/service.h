#ifndef TTT_SERVICE_H_
#define TTT_SERVICE_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "ttt/agents.h"
#include "ttt/core.h"
#include "ttt/solver.h"

namespace ttt {

// Carries an HTTP-style status: 404 unknown session, 409 illegal or
// out-of-turn move, 422 incompatible setup, 400 malformed request.
class ServiceError : public GameError {
 public:
  ServiceError(int status, const std::string& what)
      : GameError(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

using Clock = std::chrono::system_clock;

struct GameSession {
  std::string id;
  GameState state;
  AgentSpec engine;
  Seat engine_seat = Seat::kSecond;
  Clock::time_point created;
  Clock::time_point updated;
};

struct SessionView {
  std::string id;
  GameState state;
  AgentSpec engine;
  Seat engine_seat = Seat::kSecond;
  std::optional<Cell> engine_reply;
  std::optional<Outcome> outcome;
};

nlohmann::json to_json(const SessionView& view);

struct GameRecord {
  std::string id;
  Variant variant = Variant::kNormal;
  std::string agent;
  Seat engine_seat = Seat::kSecond;
  std::vector<Cell> moves;
  Outcome outcome = Outcome::kDraw;
  std::int64_t duration_ms = 0;
};

nlohmann::json to_json(const GameRecord& record);
GameRecord record_from_json(const nlohmann::json& j);

class RecordSink {
 public:
  virtual ~RecordSink() = default;
  virtual void append(const GameRecord& record) = 0;
};

// One JSON document per line, appended to `path`.
class FileRecordSink : public RecordSink {
 public:
  explicit FileRecordSink(std::string path) : path_(std::move(path)) {}
  void append(const GameRecord& record) override;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::mutex mutex_;
};

class MemoryRecordSink : public RecordSink {
 public:
  void append(const GameRecord& record) override;
  std::vector<GameRecord> records() const;

 private:
  mutable std::mutex mutex_;
  std::vector<GameRecord> records_;
};

// Session storage. Each session carries its own lock so requests against
// different sessions proceed in parallel.
class SessionStore {
 public:
  struct Entry {
    std::mutex mutex;
    GameSession session;
  };

  virtual ~SessionStore() = default;
  virtual void insert(std::shared_ptr<Entry> entry) = 0;
  virtual std::shared_ptr<Entry> find(const std::string& id) const = 0;
};

class MemorySessionStore : public SessionStore {
 public:
  void insert(std::shared_ptr<Entry> entry) override;
  std::shared_ptr<Entry> find(const std::string& id) const override;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> entries_;
};

class GameService {
 public:
  explicit GameService(std::shared_ptr<RecordSink> records = nullptr,
                       std::unique_ptr<SessionStore> store = nullptr);

  SessionView create_game(Variant variant, const AgentSpec& engine,
                          Seat engine_seat);
  SessionView get(const std::string& id) const;
  SessionView submit_move(const std::string& id, Cell cell);

  // Value of each empty cell for the human about to move. Distance counts
  // plies after the hinted move. Empty once the game is over.
  std::map<Cell, GameValue> hint(const std::string& id) const;

  // Claim suite report, computed on first request and cached.
  const nlohmann::json& claims();

 private:
  std::shared_ptr<SessionStore::Entry> lookup(const std::string& id) const;
  void finish(const GameSession& session);

  std::shared_ptr<RecordSink> records_;
  std::unique_ptr<SessionStore> store_;
  std::once_flag claims_once_;
  nlohmann::json claims_;
};

std::string new_session_id();

}  // namespace ttt

#endif  // TTT_SERVICE_H_
