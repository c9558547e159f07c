#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ttt/cli.h"

namespace ttt {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TTT_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST_CASE("solve matches golden output") {
  const Run a = run({"solve", "--pos", "N:1:........."});
  CHECK(a.code == 0);
  CHECK(a.out == golden("solve_normal_empty.txt"));
  CHECK(a.out.find("verdict: Draw") != std::string::npos);
  CHECK(run({"solve", "--pos", "N:1:........."}).out == a.out);

  const Run corner = run({"solve", "--pos", "M:2:X........"});
  CHECK(corner.out == golden("solve_misere_corner.txt"));
  CHECK(corner.out.find("verdict: Win") != std::string::npos);
  CHECK(run({"solve", "--pos", "R:1:....X...X"}).out ==
        golden("solve_reverse.txt"));

  const Run json = run({"solve", "--pos", "N:1:.........", "--json"});
  CHECK(json.out.find("\"verdict\":\"Draw\"") != std::string::npos);
}

TEST_CASE("table matches golden output") {
  for (const std::string v : {"normal", "misere", "reverse-misere"}) {
    const Run r = run({"table", "--variant", v});
    CHECK(r.code == 0);
    CHECK(r.out == golden("table_" + v + ".txt"));
  }
  CHECK(run({"table", "--variant", "reverse-misere", "--dump"}).out ==
        golden("table_reverse-misere_dump.txt"));
  CHECK(run({"table", "--variant", "normal", "--dump"}).out ==
        golden("table_normal_dump.txt"));
}

TEST_CASE("verify exit codes") {
  const Run all = run({"verify"});
  CHECK(all.code == 0);
  CHECK(all.out.find("All required claims hold.") != std::string::npos);
  // An informational refutation is printed but does not fail the run.
  const Run refuted = run({"verify", "--claim", "normal-first-corner-reply-win"});
  CHECK(refuted.code == 0);
  CHECK(refuted.out.find("[REFUTED]") != std::string::npos);
  CHECK(refuted.out.find("counterexample:") != std::string::npos);

  CHECK(run({"verify", "--claim", "no-such-claim"}).code != 0);
  const Run list = run({"verify", "--list"});
  CHECK(list.out.find("misere-mirror-no-loss\n") != std::string::npos);
  const Run json = run({"verify", "--json", "--mode", "paper"});
  CHECK(json.code == 0);
  CHECK(json.out.find("reverse-misere-validated-win") == std::string::npos);
  CHECK(json.out.find("reverse-misere-paper-win") != std::string::npos);
  const Run lines = run({"verify", "--label-mode", "lines"});
  CHECK(lines.out.find("misere-second-edge-marks") == std::string::npos);
  CHECK(lines.out.find("misere-second-edge-lines") != std::string::npos);
}

TEST_CASE("errors") {
  const Run bad = run({"solve", "--pos", "N:1:XX......."});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("parse error at offset 4") != std::string::npos);
  CHECK(run({"solve", "--pos", "garbage"}).code != 0);
  CHECK(run({"solve", "--frobnicate"}).code != 0);
  CHECK(run({}).code != 0);
  CHECK(run({"play", "--engine", "deep-blue"}).code != 0);
  const Run misuse =
      run({"play", "--variant", "misere", "--engine", "normal-first"});
  CHECK(misuse.code != 0);
  CHECK(misuse.err.find("normal-first") != std::string::npos);
}

TEST_CASE("interactive play") {
  // Human is Second against the mirror agent; junk input re-prompts.
  const Run r = run({"play", "--variant", "misere", "--engine", "misere-mirror",
                     "--seat", "second", "--records", ""},
                    "x\n10\n5\n1\n2\n3\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("Engine plays 5.") != std::string::npos);
  CHECK(r.out.find("Enter a single digit 1-9.") != std::string::npos);
  CHECK(r.out.find("Cell 5 is taken.") != std::string::npos);
  CHECK(r.out.find("Engine plays 9.") != std::string::npos);
  CHECK(r.out.find("Engine plays 8.") != std::string::npos);
  // O at 1 2 3 completes the human's own line: a misère loss.
  CHECK(r.out.find("You lose.") != std::string::npos);

  const Run eof = run({"play"}, "5\n");
  CHECK(eof.code == 1);
  CHECK(eof.err.find("input closed") != std::string::npos);
}

TEST_CASE("play records finished games") {
  const std::string path = "cli_test_records.jsonl";
  std::remove(path.c_str());
  const Run r = run({"play", "--variant", "normal", "--engine", "perfect",
                     "--seat", "first", "--records", path},
                    "5\n1\n2\n3\n4\n6\n7\n8\n9\n");
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string line;
  CHECK(std::getline(in, line));
  CHECK(line.find("\"agent\":\"perfect\"") != std::string::npos);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace ttt
