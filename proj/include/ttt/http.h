#ifndef TTT_HTTP_H_
#define TTT_HTTP_H_

#include <string>

#include "httplib.h"
#include "ttt/service.h"

namespace ttt {

// Installs the JSON endpoints:
//   POST /games            GET /games/{id}
//   POST /games/{id}/moves GET /games/{id}/hints
//   GET  /solve?pos=...    GET /claims
void register_routes(httplib::Server& server, GameService& service);

// Parses the optional "options" object of POST /games into an agent spec.
AgentSpec parse_engine(const nlohmann::json& body);

nlohmann::json solve_json(const std::string& encoding);

}  // namespace ttt

#endif  // TTT_HTTP_H_
