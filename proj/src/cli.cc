#include "ttt/cli.h"

#include <cstdlib>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "ttt/http.h"
#include "ttt/service.h"
#include "ttt/solver.h"
#include "ttt/verifier.h"

namespace ttt {
namespace {

constexpr const char* kRecordsEnv = "TTT_RECORDS";

struct PlayOptions {
  std::string variant = "normal";
  std::string engine = "perfect";
  std::string seat = "first";
  std::string mode = "validated";
  std::string label_mode = "marks";
  std::string good_choice = to_string(kShippedGoodChoice);
  std::uint64_t seed = 0;
  std::string records;
};

std::string default_records() {
  const char* env = std::getenv(kRecordsEnv);
  return env ? env : "";
}

std::string cells_line(const std::vector<Cell>& cells) {
  std::string out;
  for (Cell c : cells) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

std::string result_line(Outcome outcome, Seat human) {
  switch (outcome_score(outcome, human)) {
    case 1:
      return "You win.";
    case -1:
      return "You lose.";
  }
  return "Draw.";
}

// Reads cell numbers until a legal move is entered. Returns false on EOF.
bool read_move(std::istream& in, std::ostream& out, const GameState& state,
               Cell& move) {
  std::string line;
  while (true) {
    out << "Your move (1-9): " << std::flush;
    if (!std::getline(in, line)) return false;
    if (line.size() == 1 && line[0] >= '1' && line[0] <= '9') {
      const Cell cell(line[0] - '0');
      if (state.is_empty(cell)) {
        move = cell;
        return true;
      }
      out << "Cell " << line << " is taken.\n";
      continue;
    }
    out << "Enter a single digit 1-9.\n";
  }
}

int run_play(const PlayOptions& opts, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const Variant variant = parse_variant(opts.variant);
  const Seat human = parse_seat(opts.seat);
  AgentSpec engine;
  engine.kind = parse_agent(opts.engine);
  engine.mode = parse_agent_mode(opts.mode);
  engine.label_mode = parse_label_mode(opts.label_mode);
  engine.good_choice = parse_good_choice(opts.good_choice);
  engine.seed = opts.seed;

  std::shared_ptr<RecordSink> sink;
  if (!opts.records.empty()) sink = std::make_shared<FileRecordSink>(opts.records);
  GameService service(sink);
  SessionView view;
  try {
    view = service.create_game(variant, engine, opponent(human));
  } catch (const ServiceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << to_string(variant) << " game, you play " << to_string(human)
      << " against " << agent_name(engine.kind) << ".\n";
  while (true) {
    if (view.engine_reply) {
      out << "Engine plays " << to_string(*view.engine_reply) << ".\n";
    }
    out << render_board(view.state);
    if (view.outcome) {
      out << result_line(*view.outcome, human) << "\n";
      return 0;
    }
    Cell move(1);
    if (!read_move(in, out, view.state, move)) {
      err << "input closed before the game ended\n";
      return 1;
    }
    view = service.submit_move(view.id, move);
  }
}

int run_solve(const std::string& pos, bool json, std::ostream& out) {
  const GameState state = decode_state(pos);
  if (json) {
    out << solve_json(pos).dump() << "\n";
    return 0;
  }
  const GameValue value = solve(state);
  out << "position: " << encode_state(state) << "\n"
      << "verdict: " << to_string(value.verdict) << "\n"
      << "distance: " << value.distance << "\n"
      << "best moves: " << cells_line(best_moves(state)) << "\n";
  return 0;
}

int run_table(const std::string& variant_name, bool dump, std::ostream& out) {
  const Variant variant = parse_variant(variant_name);
  const OpeningTable table = opening_table(variant);
  out << "variant: " << to_string(variant) << "\n"
      << "opening values for the first player:\n";
  for (const auto& [opening, value] : table.entries) {
    out << "  " << to_string(opening) << " (" << to_string(representative(opening))
        << "): " << to_string(value.verdict) << " " << value.distance << "\n";
  }
  out << "reachable canonical states: " << shared_solver().size(variant) << "\n";
  if (dump) out << dump_table(variant);
  return 0;
}

int run_verify(const ClaimFilter& filter, bool json, std::ostream& out) {
  const ClaimSuiteReport report = claim_suite(filter);
  if (json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << format_text(report);
  }
  return report.required_hold() ? 0 : 1;
}

int run_serve(const std::string& host, int port, const std::string& records,
              const std::string& static_dir, std::ostream& out) {
  std::shared_ptr<RecordSink> sink;
  if (!records.empty()) sink = std::make_shared<FileRecordSink>(records);
  GameService service(sink);
  httplib::Server server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  register_routes(server, service);
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) {
    throw GameError("cannot serve static files from " + static_dir);
  }
  out << "listening on http://" << host << ":" << port << "\n" << std::flush;
  if (!server.listen(host, port)) throw GameError("cannot bind port");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver, strategy agents and claim verifier for "
               "normal, misère and reverse misère tic-tac-toe",
               "ttt"};
  app.require_subcommand(1);

  PlayOptions play;
  play.records = default_records();
  auto* play_cmd = app.add_subcommand("play", "Play against an engine");
  play_cmd->add_option("--variant", play.variant, "normal|misere|reverse-misere");
  play_cmd->add_option("--engine", play.engine, "Engine agent name");
  play_cmd->add_option("--seat", play.seat, "Your seat: first|second");
  play_cmd->add_option("--mode", play.mode, "paper|validated");
  play_cmd->add_option("--label-mode", play.label_mode, "marks|lines");
  play_cmd->add_option("--good-choice", play.good_choice,
                       "edge-between|far-corner");
  play_cmd->add_option("--seed", play.seed, "Seed for the random engine");
  play_cmd->add_option("--records", play.records,
                       "Append finished games to this file (default $TTT_RECORDS)");

  std::string pos;
  bool solve_json_out = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a position");
  solve_cmd->add_option("--pos", pos, "State encoding, e.g. N:1:.........")
      ->required();
  solve_cmd->add_flag("--json", solve_json_out, "Machine-readable output");

  std::string claim, label_mode, mode;
  bool verify_json = false, list_claims = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the claim suite");
  verify_cmd->add_option("--claim", claim, "Run only this claim id");
  verify_cmd->add_option("--label-mode", label_mode,
                         "Only label-graph claims in this mode: marks|lines");
  verify_cmd->add_option("--mode", mode,
                         "Only reverse misère claims in this mode: paper|validated");
  verify_cmd->add_flag("--json", verify_json, "Machine-readable report");
  verify_cmd->add_flag("--list", list_claims, "List claim ids and exit");

  std::string table_variant;
  bool dump = false;
  auto* table_cmd = app.add_subcommand("table", "Print opening values");
  table_cmd->add_option("--variant", table_variant, "normal|misere|reverse-misere")
      ->required();
  table_cmd->add_flag("--dump", dump, "Also print every canonical state");

  std::string host = "127.0.0.1", static_dir;
  std::string serve_records = default_records();
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP service");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--port", port, "Port");
  serve_cmd->add_option("--records", serve_records,
                        "Record file (default $TTT_RECORDS)");
  serve_cmd->add_option("--static", static_dir, "Serve a UI build from here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*play_cmd) return run_play(play, in, out, err);
    if (*solve_cmd) return run_solve(pos, solve_json_out, out);
    if (*table_cmd) return run_table(table_variant, dump, out);
    if (*verify_cmd) {
      if (list_claims) {
        for (const auto& id : claim_ids()) out << id << "\n";
        return 0;
      }
      ClaimFilter filter;
      if (!claim.empty()) filter.claim_id = claim;
      if (!label_mode.empty()) filter.label_mode = parse_label_mode(label_mode);
      if (!mode.empty()) filter.mode = parse_agent_mode(mode);
      return run_verify(filter, verify_json, out);
    }
    if (*serve_cmd) return run_serve(host, port, serve_records, static_dir, out);
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ttt
