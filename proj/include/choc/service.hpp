#pragma once

// JSON-over-HTTP API under /api/v1: live games against the engine plus read-only
// pattern, section and nim-pass endpoints.

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "choc/game_engine.hpp"

namespace httplib {
class Server;
}

namespace choc {

// Games store the human as Player::a and the engine as Player::b.
inline constexpr Player kHuman = Player::a;
inline constexpr Player kEngine = Player::b;

struct PlayedMove {
  Player player;
  Move move;
};

struct SessionRecord {
  std::string id;
  GameState initial;
  GameState state;
  std::vector<PlayedMove> history;
  std::chrono::steady_clock::time_point created;
  std::chrono::steady_clock::time_point expires;
};

struct ServiceOptions {
  std::chrono::seconds session_ttl{1800};
  // Largest board side for games and pattern endpoints; larger requests get 422.
  Side max_side = 1024;
  std::optional<std::uint64_t> seed;  // for reproducible poison placement
};

class GameService {
 public:
  explicit GameService(ServiceOptions options = {});
  ~GameService();

  GameService(const GameService&) = delete;
  GameService& operator=(const GameService&) = delete;

  void mount(httplib::Server& server);

  std::size_t session_count();

  // Drops sessions whose expiry has passed.
  void purge_expired();

  // Snapshot of a live session, for tests and diagnostics.
  std::optional<SessionRecord> snapshot(const std::string& id);

 private:
  struct Session;

  std::shared_ptr<Session> find(const std::string& id);
  std::string new_id();

  ServiceOptions options_;
  std::mutex mutex_;  // guards sessions_ and rng_
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 rng_;
};

}  // namespace choc
