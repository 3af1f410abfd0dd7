#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef _WIN32
#include <sys/wait.h>
#include <unistd.h>
#endif

#include "tables.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("aoaforge_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Runs the binary through the shell with stdin_text piped in; an env
// prefix like "AOAFORGE_INJECT_FAULT=1" may precede the arguments.
RunResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  const std::string& env = "") {
  static int counter = 0;
  fs::path in = work_dir() / ("in" + std::to_string(counter));
  fs::path out = work_dir() / ("out" + std::to_string(counter));
  fs::path err = work_dir() / ("err" + std::to_string(counter));
  ++counter;
  write_file(in, stdin_text);

  std::string cmd = env + (env.empty() ? "" : " ") + "\"" AOAFORGE_CLI_PATH
                    "\" " + args + " < \"" + in.string() + "\" > \"" +
                    out.string() + "\" 2> \"" + err.string() + "\"";
  int rc = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.exit_code = rc;
#else
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
#endif
  r.out = read_file(out);
  r.err = read_file(err);
  return r;
}

const std::string kStatsA =
    "events=12 real_arcs=12 dummy_arcs=5 bipartites=10 z_bars=5 "
    "iterations=1 fallback=no";

}  // namespace

TEST_CASE("[cli] convert emits the network as json") {
  RunResult r = run_cli("convert", tables::kProjectA);
  REQUIRE(r.exit_code == 0);
  CHECK(r.err.empty());
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["events"].size() == 12);
  CHECK(j["arcs"].size() == 17);
  CHECK(j["events"][0]["origin"] == "source");
  CHECK(j["events"][11]["origin"] == "sink");
  CHECK(j["stats"]["event_count"] == 12);
  CHECK(j["stats"]["z_bar_count"] == 5);
  CHECK(j["stats"]["fallback"] == false);
  bool saw_f5 = false;
  for (const auto& a : j["arcs"]) {
    if (a["label"] == "f5") {
      saw_f5 = true;
      CHECK(a["tail"] == 4);
      CHECK(a["head"] == 7);
      CHECK(a["kind"] == "dummy");
      CHECK(a["duration"] == 0);
    }
  }
  CHECK(saw_f5);
}

TEST_CASE("[cli] convert renders dot with a stats trailer") {
  RunResult r = run_cli("convert --format dot --stats", tables::kProjectA);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("digraph aoa {", 0) == 0);
  CHECK(r.out.find("label=\"A(2)\"") != std::string::npos);
  CHECK(r.out.find("style=dashed") != std::string::npos);
  CHECK(r.out.find("// stats: " + kStatsA + "\n") != std::string::npos);
}

TEST_CASE("[cli] convert prints stats to stderr in json mode") {
  RunResult r = run_cli("convert --stats", tables::kProjectA);
  REQUIRE(r.exit_code == 0);
  CHECK(r.err == kStatsA + "\n");
}

TEST_CASE("[cli] check summarizes a good table") {
  RunResult r = run_cli("check", tables::kProjectB);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "ok: events=13 real_arcs=14 dummy_arcs=5 bipartites=11 z_bars=7 "
        "iterations=1 fallback=no\n");
}

TEST_CASE("[cli] cyclic input fails with the validation report") {
  RunResult r = run_cli("check",
                        "code,duration,predecessors\n"
                        "a,1,b\n"
                        "b,1,a\n");
  CHECK(r.exit_code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.rfind("error: invalid activity graph:", 0) == 0);
  CHECK(r.err.find("cycle (") != std::string::npos);
}

TEST_CASE("[cli] parse errors cite the line") {
  RunResult r = run_cli("convert", "code,duration,predecessors\na,soon,-\n");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("line 2: malformed duration 'soon' for code a") !=
        std::string::npos);
}

TEST_CASE("[cli] error output is plain text when redirected") {
  RunResult r = run_cli("convert", "not a table\n");
  CHECK(r.exit_code == 1);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(r.err.find('\x1b') == std::string::npos);
}

TEST_CASE("[cli] an injected fault can never exit zero") {
  RunResult r =
      run_cli("convert", tables::kProjectA, "AOAFORGE_INJECT_FAULT=1");
  CHECK(r.exit_code == 2);
  CHECK(r.err.rfind("error: internal invariant violation:", 0) == 0);
  CHECK(r.err.find("precedence oracle failed") != std::string::npos);
}

TEST_CASE("[cli] levels prints the layering as csv") {
  RunResult r = run_cli("levels", tables::kProjectA);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "level,codes\n"
        "1,α\n"
        "2,A;B;D\n"
        "3,G;H\n"
        "4,C;E;I\n"
        "5,F;J\n"
        "6,ω\n");
}

TEST_CASE("[cli] levels renders json on request") {
  RunResult r = run_cli("levels --format json", tables::kProjectA);
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["levels"]["2"] == nlohmann::json({"A", "B", "D"}));
  CHECK(j["levels"]["6"] == nlohmann::json({"ω"}));
}

TEST_CASE("[cli] cpm reports the critical-path schedule") {
  RunResult r = run_cli("cpm", tables::kProjectA);
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["cpm"]["makespan"] == 14);
  CHECK(j["cpm"]["early"]["11"] == 14);
  CHECK(j["cpm"]["late"]["3"] == 3);
  CHECK(j["cpm"]["total_float"]["f5"] == 0);
  CHECK(j["cpm"]["total_float"]["A"] == 5);
  CHECK(j["cpm"]["critical"] ==
        nlohmann::json({"α", "D", "H", "I", "F", "ω"}));
}

TEST_CASE("[cli] gen is deterministic and feeds the pipeline") {
  RunResult first = run_cli("gen --nodes 6 --density 0.4 --seed 7");
  RunResult second = run_cli("gen --nodes 6 --density 0.4 --seed 7");
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.rfind("code,duration,predecessors\n", 0) == 0);
  RunResult conv = run_cli("convert", first.out);
  CHECK(conv.exit_code == 0);
}

TEST_CASE("[cli] render draws both graph forms") {
  RunResult aon = run_cli("render --graph aon", tables::kProjectA);
  REQUIRE(aon.exit_code == 0);
  CHECK(aon.out.rfind("digraph aon {", 0) == 0);
  CHECK(aon.out.find("rank=same") != std::string::npos);
  RunResult aoa = run_cli("render", tables::kProjectA);
  REQUIRE(aoa.exit_code == 0);
  CHECK(aoa.out.rfind("digraph aoa {", 0) == 0);
}

TEST_CASE("[cli] reads and writes files") {
  fs::path out = work_dir() / "net.json";
  std::string input = std::string(AOAFORGE_DATA_DIR) + "/project_a.csv";
  RunResult r = run_cli("convert \"" + input + "\" -o \"" + out.string() + "\"");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(read_file(out));
  CHECK(j["events"].size() == 12);

  RunResult missing = run_cli("convert /no/such/file.csv");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.rfind("error: ", 0) == 0);
}

TEST_CASE("[cli] strict marker policy is enforced") {
  RunResult r = run_cli("convert --strict-alpha-omega", tables::kMinimal);
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("strict policy requires") != std::string::npos);
}

TEST_CASE("[cli] usage problems exit with code one") {
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("convert --format yaml", tables::kProjectA).exit_code == 1);
  CHECK(run_cli("gen --nodes 0").exit_code == 1);
  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("convert") != std::string::npos);
}
