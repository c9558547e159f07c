#include "ttt/http.h"

namespace ttt {
namespace {

void send_json(httplib::Response& res, const nlohmann::json& body,
               int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& what) {
  send_json(res, {{"error", what}}, status);
}

// Runs `handler`, mapping library errors onto HTTP statuses.
template <typename Handler>
void guarded(httplib::Response& res, Handler&& handler) {
  try {
    handler();
  } catch (const ServiceError& e) {
    send_error(res, e.status(), e.what());
  } catch (const ParseError& e) {
    send_json(res, {{"error", e.what()}, {"offset", e.offset()}}, 400);
  } catch (const nlohmann::json::exception& e) {
    send_error(res, 400, std::string("bad request body: ") + e.what());
  } catch (const GameError& e) {
    send_error(res, 422, e.what());
  }
}

nlohmann::json value_json(const GameValue& value) {
  return {{"verdict", to_string(value.verdict)}, {"distance", value.distance}};
}

}  // namespace

AgentSpec parse_engine(const nlohmann::json& body) {
  AgentSpec spec;
  spec.kind = parse_agent(body.at("engine").get<std::string>());
  const auto options = body.value("options", nlohmann::json::object());
  if (options.contains("mode")) {
    spec.mode = parse_agent_mode(options.at("mode").get<std::string>());
  }
  if (options.contains("label_mode")) {
    spec.label_mode = parse_label_mode(options.at("label_mode").get<std::string>());
  }
  if (options.contains("good_choice")) {
    spec.good_choice =
        parse_good_choice(options.at("good_choice").get<std::string>());
  }
  if (options.contains("seed")) {
    spec.seed = options.at("seed").get<std::uint64_t>();
  }
  return spec;
}

nlohmann::json solve_json(const std::string& encoding) {
  const GameState state = decode_state(encoding);
  const GameValue value = solve(state);
  std::vector<int> moves;
  for (Cell c : best_moves(state)) moves.push_back(c.index());
  return {{"state", encode_state(state)},
          {"verdict", to_string(value.verdict)},
          {"distance", value.distance},
          {"best_moves", moves}};
}

void register_routes(httplib::Server& server, GameService& service) {
  server.Post("/games", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto body = nlohmann::json::parse(req.body);
      const Variant variant = parse_variant(body.at("variant").get<std::string>());
      const Seat seat = parse_seat(body.at("engine_seat").get<std::string>());
      const AgentSpec engine = parse_engine(body);
      send_json(res, to_json(service.create_game(variant, engine, seat)), 201);
    });
  });

  server.Get(R"(/games/([0-9a-f]+))",
             [&](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] {
                 send_json(res, to_json(service.get(req.matches[1])));
               });
             });

  server.Post(R"(/games/([0-9a-f]+)/moves)",
              [&](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] {
                  const auto body = nlohmann::json::parse(req.body);
                  const int index = body.at("cell").get<int>();
                  if (index < 1 || index > 9) {
                    throw ServiceError(400, "cell must be 1..9");
                  }
                  send_json(res, to_json(service.submit_move(req.matches[1],
                                                             Cell(index))));
                });
              });

  server.Get(R"(/games/([0-9a-f]+)/hints)",
             [&](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] {
                 nlohmann::json cells = nlohmann::json::object();
                 for (const auto& [cell, value] : service.hint(req.matches[1])) {
                   cells[to_string(cell)] = value_json(value);
                 }
                 send_json(res, {{"cells", cells}});
               });
             });

  server.Get("/solve", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      if (!req.has_param("pos")) throw ServiceError(400, "missing pos parameter");
      send_json(res, solve_json(req.get_param_value("pos")));
    });
  });

  server.Get("/claims", [&](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] { send_json(res, service.claims()); });
  });
}

}  // namespace ttt
