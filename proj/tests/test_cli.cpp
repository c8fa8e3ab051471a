#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

// End-to-end tests of the command line tool. The binary location and the
// scenario corpus come from the environment (set by the test harness), so
// these cases exercise the same artifacts a user would run.

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_command(const std::string& cmd) {
  RunResult res;
  FILE* pipe = ::popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::fgets(buf, sizeof(buf), pipe) != nullptr) res.output += buf;
  const int status = ::pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

std::string cli_path() {
  const char* exe = std::getenv("KCOLOR_CLI");
  REQUIRE_MESSAGE(exe != nullptr, "KCOLOR_CLI must point at the planner binary");
  return exe;
}

RunResult run_cli(const std::string& args) { return run_command(cli_path() + " " + args); }

std::string scenario_path(const std::string& name) {
  const char* dir = std::getenv("KCOLOR_SCENARIOS");
  REQUIRE_MESSAGE(dir != nullptr, "KCOLOR_SCENARIOS must point at the scenario corpus");
  const fs::path p = fs::path(dir) / (name + ".json");
  REQUIRE_MESSAGE(fs::exists(p), "missing corpus scenario: " << p.string());
  return p.string();
}

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "kcolor_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("plan solves a corpus scenario and verify accepts the result") {
  const fs::path out = temp_dir() / "field_plan.json";
  const RunResult plan = run_cli("plan --scenario " + scenario_path("unlabeled_field") +
                                 " --g 3 --q 40 --mu 40 --seed 5 --out " + out.string());
  CAPTURE(plan.output);
  REQUIRE(plan.exit_code == 0);
  CHECK(contains(plan.output, "solved scenario=unlabeled_field"));
  CHECK(contains(plan.output, "robots=10"));
  REQUIRE(fs::exists(out));

  const json j = json::parse(slurp(out));
  CHECK(j["scenario"] == "unlabeled_field");
  CHECK(j["mode"] == "kpump");
  CHECK(j["params"]["mu"] == 40);
  CHECK(j["params"]["seed"] == 5);
  CHECK(j["steps"].is_array());
  CHECK(!j["steps"].empty());

  const RunResult verify = run_cli("verify --scenario " + scenario_path("unlabeled_field") +
                                   " --plan " + out.string());
  CAPTURE(verify.output);
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.rfind("PASS", 0) == 0);
}

TEST_CASE("verify flags a corrupted plan and writes a JSON report") {
  const fs::path out = temp_dir() / "corrupt_plan.json";
  const RunResult plan = run_cli("plan --scenario " + scenario_path("unlabeled_field") +
                                 " --g 3 --q 40 --mu 40 --seed 5 --out " + out.string());
  REQUIRE(plan.exit_code == 0);

  // Teleport the first moved robot into the wall obstacle (x 14..16, y 5..15).
  json j = json::parse(slurp(out));
  REQUIRE(!j["steps"].empty());
  j["steps"][0]["motions"][0]["to"] = {15.0, 10.0};
  spit(out, j.dump(2) + "\n");

  const fs::path report = temp_dir() / "corrupt_report.json";
  const RunResult verify = run_cli("verify --scenario " + scenario_path("unlabeled_field") +
                                   " --plan " + out.string() + " --report " + report.string());
  CAPTURE(verify.output);
  CHECK(verify.exit_code == 1);
  CHECK(verify.output.rfind("FAIL", 0) == 0);
  CHECK(contains(verify.output, "workspace_collision"));

  const json rep = json::parse(slurp(report));
  CHECK(rep["pass"] == false);
  CHECK(!rep["violations"].empty());
}

TEST_CASE("plan output is byte-identical for a fixed seed") {
  const std::string args = "plan --scenario " + scenario_path("unlabeled_field") +
                           " --g 3 --q 40 --mu 40 --seed 11 --out ";
  const fs::path out_a = temp_dir() / "det_a.json";
  const fs::path out_b = temp_dir() / "det_b.json";
  REQUIRE(run_cli(args + out_a.string()).exit_code == 0);
  REQUIRE(run_cli(args + out_b.string()).exit_code == 0);
  CHECK(slurp(out_a) == slurp(out_b));

  const fs::path out_c = temp_dir() / "det_c.json";
  const RunResult other = run_cli("plan --scenario " + scenario_path("unlabeled_field") +
                                  " --g 3 --q 40 --mu 40 --seed 12 --out " + out_c.string());
  REQUIRE(other.exit_code == 0);
  CHECK(slurp(out_a) != slurp(out_c));
}

TEST_CASE("kbasic baseline is selectable and recorded in the plan file") {
  const fs::path out = temp_dir() / "kbasic_plan.json";
  const RunResult plan = run_cli("plan --scenario " + scenario_path("cluttered_four") +
                                 " --g 2 --q 20 --seed 0 --baseline kbasic --out " +
                                 out.string());
  CAPTURE(plan.output);
  REQUIRE(plan.exit_code == 0);
  const json j = json::parse(slurp(out));
  CHECK(j["mode"] == "kbasic");

  const RunResult verify = run_cli("verify --scenario " + scenario_path("cluttered_four") +
                                   " --plan " + out.string());
  CHECK(verify.exit_code == 0);

  const RunResult bad = run_cli("plan --scenario " + scenario_path("cluttered_four") +
                                " --g 2 --q 20 --baseline nosuch --out " + out.string());
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "unknown baseline"));
}

TEST_CASE("pebble subcommand prints the move sequence") {
  const fs::path inst = temp_dir() / "path3.pebble";
  spit(inst, "3 2\n0 1\n1 2\nS: 0\nT: 2\n");
  const RunResult res = run_cli("pebble --input " + inst.string());
  CAPTURE(res.output);
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "pebble 0: 0 -> 1"));
  CHECK(contains(res.output, "pebble 0: 1 -> 2"));
  CHECK(contains(res.output, "moves: 2"));
}

TEST_CASE("pebble subcommand reports unreachable targets with exit 2") {
  const fs::path inst = temp_dir() / "split.pebble";
  spit(inst, "2 0\nS: 0\nT: 1\n");
  const RunResult res = run_cli("pebble --input " + inst.string());
  CAPTURE(res.output);
  CHECK(res.exit_code == 2);
  CHECK(contains(res.output, "not equivalent"));

  CHECK(run_cli("pebble --input " + (temp_dir() / "nosuch.pebble").string()).exit_code == 1);
}

TEST_CASE("svg renders a scenario with and without a plan") {
  const fs::path still = temp_dir() / "scene.svg";
  const RunResult bare = run_cli("svg --scenario " + scenario_path("coupled_five") +
                                 " --out " + still.string());
  CAPTURE(bare.output);
  REQUIRE(bare.exit_code == 0);
  const std::string still_text = slurp(still);
  CHECK(contains(still_text, "<svg"));
  CHECK(contains(still_text, "<polygon"));
  CHECK(contains(still_text, "<circle"));
  CHECK(!contains(still_text, "<animate"));

  const fs::path plan_file = temp_dir() / "anim_plan.json";
  REQUIRE(run_cli("plan --scenario " + scenario_path("unlabeled_field") +
                  " --g 3 --q 40 --mu 40 --seed 5 --out " + plan_file.string())
              .exit_code == 0);
  const fs::path anim = temp_dir() / "scene_anim.svg";
  const RunResult moving = run_cli("svg --scenario " + scenario_path("unlabeled_field") +
                                   " --plan " + plan_file.string() + " --out " + anim.string());
  CAPTURE(moving.output);
  REQUIRE(moving.exit_code == 0);
  CHECK(contains(slurp(anim), "<animate"));
}

TEST_CASE("bench prints per-run rows and a summary table") {
  const RunResult res = run_cli("bench --scenario " + scenario_path("cluttered_four") +
                                " --planners kpump --g 2 --q 15 --mu 28 --seeds 1"
                                " --time-limit 60");
  CAPTURE(res.output);
  REQUIRE(res.exit_code == 0);
  CHECK(contains(res.output, "robots"));
  CHECK(contains(res.output, "kpump"));
  CHECK(contains(res.output, "median_s"));
  // one row per incremental robot count, plus the summary
  CHECK(contains(res.output, "1/1"));

  CHECK(run_cli("bench --scenario " + scenario_path("cluttered_four") +
                " --planners nosuch --mu 10")
            .exit_code == 1);
}

TEST_CASE("infeasible scenarios exit with code 2") {
  const fs::path blocked = temp_dir() / "blocked.json";
  spit(blocked, R"({
  "name": "blocked",
  "workspace": {
    "boundary": [[0, 0], [12, 0], [12, 10], [0, 10]],
    "obstacles": [[[5.5, 0.05], [6.5, 0.05], [6.5, 9.95], [5.5, 9.95]]]
  },
  "colors": [
    {"radius": 0.5, "starts": [[2, 5]], "targets": [[10, 5]]}
  ]
})");
  const fs::path out = temp_dir() / "blocked_plan.json";
  const RunResult res = run_cli("plan --scenario " + blocked.string() +
                                " --g 2 --q 10 --mu 4 --seed 0 --out " + out.string());
  CAPTURE(res.output);
  CHECK(res.exit_code == 2);
  CHECK(contains(res.output, "no plan"));
  CHECK(!fs::exists(out));
}

TEST_CASE("usage and input errors exit with code 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("nosuchcommand").exit_code == 1);
  CHECK(run_cli("plan --scenario x.json").exit_code == 1);  // missing required --out

  const fs::path out = temp_dir() / "unused.json";
  const RunResult missing_mu = run_cli("plan --scenario " + scenario_path("cluttered_four") +
                                       " --out " + out.string());
  CHECK(missing_mu.exit_code == 1);
  CHECK(contains(missing_mu.output, "--mu"));

  const RunResult no_file = run_cli("plan --scenario " + (temp_dir() / "nosuch.json").string() +
                                    " --mu 10 --out " + out.string());
  CHECK(no_file.exit_code == 1);
  CHECK(contains(no_file.output, "error"));

  const fs::path bad = temp_dir() / "bad.json";
  spit(bad, "{ this is not json");
  CHECK(run_cli("plan --scenario " + bad.string() + " --mu 10 --out " + out.string())
            .exit_code == 1);
  CHECK(run_cli("verify --scenario " + bad.string() + " --plan " + bad.string()).exit_code == 1);
}

TEST_CASE("help text lists every subcommand") {
  const RunResult res = run_cli("--help");
  CHECK(res.exit_code == 0);
  for (const char* sub : {"plan", "verify", "pebble", "svg", "bench"}) {
    CHECK(contains(res.output, sub));
  }
}

}  // TEST_SUITE
