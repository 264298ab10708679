#include "choc/service.hpp"

#include <charconv>
#include <string>

#include "httplib.h"
#include "json.hpp"

#include "choc/automaton.hpp"
#include "choc/core_positions.hpp"
#include "choc/enumeration.hpp"
#include "choc/errors.hpp"
#include "choc/formats.hpp"
#include "choc/nim_pass.hpp"
#include "choc/recursion.hpp"
#include "choc/sierpinski.hpp"

namespace choc {

using nlohmann::json;

struct GameService::Session {
  std::mutex mutex;
  SessionRecord record;
};

namespace {

// Raised inside handlers to produce a specific status.
struct HttpError {
  int status;
  std::string message;
};

const char* player_name(Player p) { return p == kHuman ? "human" : "engine"; }

json move_json(const Move& mv) { return {{"axis", to_string(mv.axis)}, {"cut", mv.cut}}; }

json state_json(const GameState& s) {
  return {
      {"w", s.w},
      {"h", s.h},
      {"poison", {{"i", s.poison.i}, {"j", s.poison.j}}},
      {"mover", player_name(s.mover)},
      {"terminal", s.terminal()},
      {"nim_value", s.nim_value()},
  };
}

json legal_moves_json(const GameState& s) {
  json out = json::array();
  for (const Move& mv : legal_moves(s)) out.push_back(move_json(mv));
  return out;
}

json history_json(const std::vector<PlayedMove>& history) {
  json out = json::array();
  for (const auto& pm : history) {
    json entry = move_json(pm.move);
    entry["player"] = player_name(pm.player);
    out.push_back(std::move(entry));
  }
  return out;
}

// Game view shared by every game endpoint.
json game_json(const SessionRecord& rec) {
  json out = {
      {"id", rec.id},
      {"state", state_json(rec.state)},
      {"legal_moves", legal_moves_json(rec.state)},
      {"history", history_json(rec.history)},
      {"classification", rec.state.nim_value() == 0 ? "P" : "N"},
  };
  if (rec.state.terminal()) out["winner"] = player_name(other(rec.state.mover));
  return out;
}

std::uint64_t parse_path_number(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw HttpError{422, std::string(what) + " too large"};
  }
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw HttpError{400, std::string(what) + " must be a nonnegative integer"};
  }
  return v;
}

Side checked_side(std::uint64_t m, Side max_side, const char* what) {
  if (m < 1) throw HttpError{400, std::string(what) + " must be >= 1"};
  if (m > max_side) {
    throw HttpError{422, std::string(what) + " exceeds service bound " + std::to_string(max_side)};
  }
  return static_cast<Side>(m);
}

Side json_side(const json& body, const char* key, Side max_side) {
  const json& v = body.at(key);
  if (!v.is_number_integer()) throw HttpError{400, std::string(key) + " must be an integer"};
  const auto value = v.get<std::int64_t>();
  if (value < 1) throw HttpError{400, std::string(key) + " must be >= 1"};
  return checked_side(static_cast<std::uint64_t>(value), max_side, key);
}

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const HttpError& e) {
      send_json(res, e.status, {{"error", e.message}});
    } catch (const json::exception& e) {
      send_json(res, 400, {{"error", std::string("bad request body: ") + e.what()}});
    } catch (const IllegalMoveError& e) {
      send_json(res, 409, {{"error", e.what()}});
    } catch (const CapacityError& e) {
      send_json(res, 422, {{"error", e.what()}});
    } catch (const DomainError& e) {
      send_json(res, 400, {{"error", e.what()}});
    }
  };
}

void play_engine_turns(SessionRecord& rec) {
  while (!rec.state.terminal() && rec.state.mover == kEngine) {
    const Move mv = best_move(rec.state);
    rec.state = apply_move(rec.state, mv);
    rec.history.push_back({kEngine, mv});
  }
}

json cells_json(const Pattern& p) {
  json out = json::array();
  for (const Cell c : p.cells()) out.push_back({c.i, c.j});
  return out;
}

}  // namespace

GameService::GameService(ServiceOptions options)
    : options_(options), rng_(options.seed ? *options.seed : std::random_device{}()) {}

GameService::~GameService() = default;

std::string GameService::new_id() {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  do {
    id.clear();
    for (int k = 0; k < 32; ++k) id += kHex[rng_() & 0xF];
  } while (sessions_.count(id) != 0);
  return id;
}

std::size_t GameService::session_count() {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void GameService::purge_expired() {
  const auto now = std::chrono::steady_clock::now();
  std::lock_guard lock(mutex_);
  std::erase_if(sessions_, [&](const auto& entry) {
    std::lock_guard session_lock(entry.second->mutex);
    return entry.second->record.expires <= now;
  });
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) {
  purge_expired();
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  return it->second;
}

std::optional<SessionRecord> GameService::snapshot(const std::string& id) {
  auto session = find(id);
  if (!session) return std::nullopt;
  std::lock_guard lock(session->mutex);
  return session->record;
}

void GameService::mount(httplib::Server& server) {
  server.Post("/api/v1/games", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const json body = req.body.empty() ? json::object() : json::parse(req.body);
    if (!body.is_object()) throw HttpError{400, "body must be a JSON object"};
    const Side m = json_side(body, "m", options_.max_side);
    const Side n = body.contains("n") ? json_side(body, "n", options_.max_side) : m;
    const bool engine_first = body.value("engine_first", false);

    auto session = std::make_shared<Session>();
    SessionRecord& rec = session->record;
    Cell poison;
    {
      std::lock_guard lock(mutex_);
      if (body.contains("poison")) {
        const json& p = body.at("poison");
        const auto i = p.at("i").get<std::int64_t>();
        const auto j = p.at("j").get<std::int64_t>();
        if (i < 1 || j < 1 || i > m || j > n) throw HttpError{400, "poison outside the bar"};
        poison = {static_cast<Index>(i), static_cast<Index>(j)};
      } else {
        poison = {std::uniform_int_distribution<Index>(1, m)(rng_),
                  std::uniform_int_distribution<Index>(1, n)(rng_)};
      }
      rec.id = new_id();
    }
    rec.initial = make_state(m, n, poison, engine_first ? kEngine : kHuman);
    rec.state = rec.initial;
    rec.created = std::chrono::steady_clock::now();
    rec.expires = rec.created + options_.session_ttl;
    play_engine_turns(rec);

    const json out = game_json(rec);
    {
      std::lock_guard lock(mutex_);
      sessions_.emplace(rec.id, session);
    }
    send_json(res, 201, out);
  }));

  server.Get(R"(/api/v1/games/([^/]+))",
             guarded([this](const httplib::Request& req, httplib::Response& res) {
               auto session = find(req.matches[1]);
               if (!session) throw HttpError{404, "unknown game"};
               std::lock_guard lock(session->mutex);
               session->record.expires = std::chrono::steady_clock::now() + options_.session_ttl;
               send_json(res, 200, game_json(session->record));
             }));

  server.Post(R"(/api/v1/games/([^/]+)/moves)",
              guarded([this](const httplib::Request& req, httplib::Response& res) {
                auto session = find(req.matches[1]);
                if (!session) throw HttpError{404, "unknown game"};
                const json body = json::parse(req.body);
                if (!body.is_object()) throw HttpError{400, "body must be a JSON object"};
                const auto axis = parse_axis(body.at("axis").get<std::string>());
                if (!axis) throw HttpError{400, "axis must be vertical or horizontal"};
                const auto cut = body.at("cut").get<std::int64_t>();
                if (cut < 0 || cut > static_cast<std::int64_t>(kMaxSide)) {
                  throw HttpError{409, "cut out of range"};
                }

                std::lock_guard lock(session->mutex);
                SessionRecord& rec = session->record;
                if (rec.state.terminal()) throw HttpError{409, "game is over"};
                if (rec.state.mover != kHuman) throw HttpError{409, "not the human's turn"};
                if (body.contains("ply") && body.at("ply").get<std::int64_t>() !=
                                                static_cast<std::int64_t>(rec.history.size())) {
                  throw HttpError{409, "stale move: game has advanced"};
                }
                const Move human{*axis, static_cast<Index>(cut)};
                // apply_move throws before anything is mutated.
                const GameState after_human = apply_move(rec.state, human);
                rec.state = after_human;
                rec.history.push_back({kHuman, human});
                const std::size_t before_engine = rec.history.size();
                play_engine_turns(rec);
                rec.expires = std::chrono::steady_clock::now() + options_.session_ttl;

                json out = game_json(rec);
                out["human_move"] = move_json(human);
                out["after_human"] = state_json(after_human);
                out["engine_move"] = rec.history.size() > before_engine
                                         ? move_json(rec.history[before_engine].move)
                                         : json(nullptr);
                send_json(res, 200, out);
              }));

  server.Get(R"(/api/v1/patterns/([^/]+))",
             guarded([this](const httplib::Request& req, httplib::Response& res) {
               const Side m = checked_side(parse_path_number(req.matches[1], "m"), options_.max_side, "m");
               const std::string method = req.has_param("method") ? req.get_param_value("method") : "xor";
               Pattern p;
               if (method == "xor") {
                 p = pattern(m);
               } else if (method == "recursive") {
                 p = pattern_recursive(m);
               } else if (method == "ca") {
                 p = ca_pattern(m);
               } else {
                 throw HttpError{400, "method must be xor, recursive or ca"};
               }
               send_json(res, 200,
                         {{"m", m}, {"method", method}, {"g", g(m).convert_to<std::uint64_t>()},
                          {"cells", cells_json(p)}});
             }));

  server.Get(R"(/api/v1/patterns/([^/]+)/svg)",
             guarded([this](const httplib::Request& req, httplib::Response& res) {
               const Side m = checked_side(parse_path_number(req.matches[1], "m"), options_.max_side, "m");
               res.status = 200;
               res.set_content(to_svg(pattern(m)), "image/svg+xml");
             }));

  server.Get(R"(/api/v1/sierpinski/([^/]+)/([^/]+))",
             guarded([](const httplib::Request& req, httplib::Response& res) {
               const std::uint64_t n = parse_path_number(req.matches[1], "n");
               const std::uint64_t m = parse_path_number(req.matches[2], "m");
               if (n > kMaxOrder) throw HttpError{422, "order exceeds " + std::to_string(kMaxOrder)};
               if (m >= (std::uint64_t{2} << n)) throw HttpError{400, "level outside (0, 2)"};
               bool half = false;
               if (req.has_param("half")) {
                 const std::string flag = req.get_param_value("half");
                 if (flag == "true" || flag == "1") {
                   half = true;
                 } else if (flag != "false" && flag != "0") {
                   throw HttpError{400, "half must be true or false"};
                 }
               }
               const auto order = static_cast<unsigned>(n);
               const Section sec = half ? half_section(order, static_cast<std::int64_t>(m))
                                        : integer_section(order, static_cast<std::int64_t>(m));
               json diamonds = json::array();
               for (const Diamond& d : sec.diamonds) {
                 diamonds.push_back({{"cx_num", d.cx}, {"cy_num", d.cy}, {"r_num", d.r}, {"den", sec.den}});
               }
               send_json(res, 200,
                         {{"n", sec.order},
                          {"level_num", sec.level_num},
                          {"level_den", sec.level_den},
                          {"count", sec.diamonds.size()},
                          {"diamonds", std::move(diamonds)}});
             }));

  server.Get(R"(/api/v1/nimpass/([^/]+))",
             guarded([](const httplib::Request& req, httplib::Response& res) {
               const std::uint64_t m = parse_path_number(req.matches[1], "m");
               if (m < 1) throw HttpError{400, "m must be >= 1"};
               if (m > kMaxPassPile + 1) {
                 throw HttpError{422, "m exceeds " + std::to_string(kMaxPassPile + 1)};
               }
               const OverlayPattern o = overlay(static_cast<Side>(m));
               send_json(res, 200, {{"m", m}, {"blue", cells_json(o.blue)}, {"red", cells_json(o.red)}});
             }));
}

}  // namespace choc
