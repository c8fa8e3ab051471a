#include "kcolor/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kcolor/errors.hpp"

namespace kcolor {

using json = nlohmann::json;

namespace {

geom::Point point_from_json(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(where, "expected a point as [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(geom::Point p) { return json::array({p.x, p.y}); }

std::vector<geom::Point> points_from_json(const json& j, const char* where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of points");
  std::vector<geom::Point> pts;
  pts.reserve(j.size());
  for (const auto& e : j) pts.push_back(point_from_json(e, where));
  return pts;
}

json points_to_json(const std::vector<geom::Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(point_to_json(p));
  return arr;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string(), "cannot open file for writing");
  out << text;
  if (!out) throw ParseError(path.string(), "write failed");
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(what, e.what());
  }
}

}  // namespace

Scenario scenario_from_json(const std::string& text, const std::string& name_hint) {
  const json j = parse_json(text, "scenario");
  if (!j.is_object()) throw ParseError("scenario", "top level must be an object");

  Scenario sc;
  try {
    sc.name = j.value("name", name_hint);

    if (!j.contains("workspace") || !j["workspace"].is_object()) {
      throw ParseError("scenario", "missing \"workspace\" object");
    }
    const json& ws = j["workspace"];
    if (!ws.contains("boundary")) throw ParseError("workspace", "missing \"boundary\"");
    sc.workspace.boundary = geom::Polygon(points_from_json(ws["boundary"], "boundary"));
    if (ws.contains("obstacles")) {
      if (!ws["obstacles"].is_array()) {
        throw ParseError("workspace", "\"obstacles\" must be an array");
      }
      for (const auto& o : ws["obstacles"]) {
        sc.workspace.obstacles.emplace_back(points_from_json(o, "obstacle"));
      }
    }

    if (!j.contains("colors") || !j["colors"].is_array()) {
      throw ParseError("scenario", "missing \"colors\" array");
    }
    for (const auto& c : j["colors"]) {
      if (!c.is_object() || !c.contains("radius") || !c["radius"].is_number()) {
        throw ParseError("colors", "each color needs a numeric \"radius\"");
      }
      ColorGroup g;
      g.radius = c["radius"].get<double>();
      if (!c.contains("starts") || !c.contains("targets")) {
        throw ParseError("colors", "each color needs \"starts\" and \"targets\"");
      }
      g.starts = points_from_json(c["starts"], "starts");
      g.targets = points_from_json(c["targets"], "targets");
      sc.groups.push_back(std::move(g));
    }
  } catch (const json::exception& e) {
    throw ParseError("scenario", e.what());
  }

  validate_scenario(sc);
  return sc;
}

std::string scenario_to_json(const Scenario& sc) {
  json j;
  if (!sc.name.empty()) j["name"] = sc.name;
  j["workspace"]["boundary"] = points_to_json(sc.workspace.boundary.vertices());
  j["workspace"]["obstacles"] = json::array();
  for (const auto& o : sc.workspace.obstacles) {
    j["workspace"]["obstacles"].push_back(points_to_json(o.vertices()));
  }
  j["colors"] = json::array();
  for (const auto& g : sc.groups) {
    json c;
    c["radius"] = g.radius;
    c["starts"] = points_to_json(g.starts);
    c["targets"] = points_to_json(g.targets);
    j["colors"].push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

Scenario load_scenario(const std::filesystem::path& path) {
  return scenario_from_json(read_file(path), path.stem().string());
}

void save_scenario(const Scenario& sc, const std::filesystem::path& path) {
  write_file(path, scenario_to_json(sc));
}

namespace {

json motion_to_json(const RobotMotion& m) {
  json j;
  j["robot"] = json::array({m.robot.color, m.robot.index});
  j["from"] = point_to_json(m.motion.from);
  j["to"] = point_to_json(m.motion.to);
  return j;
}

RobotMotion motion_from_json(const json& j) {
  if (!j.is_object() || !j.contains("robot") || !j["robot"].is_array() ||
      j["robot"].size() != 2) {
    throw ParseError("plan step", "motion needs \"robot\": [color, index]");
  }
  RobotMotion m;
  m.robot.color = j["robot"][0].get<int>();
  m.robot.index = j["robot"][1].get<int>();
  m.motion.from = point_from_json(j.at("from"), "motion");
  m.motion.to = point_from_json(j.at("to"), "motion");
  return m;
}

}  // namespace

PlanFile plan_file_from_json(const std::string& text) {
  const json j = parse_json(text, "plan");
  if (!j.is_object()) throw ParseError("plan", "top level must be an object");

  PlanFile pf;
  try {
    pf.scenario_name = j.value("scenario", "");
    pf.mode = j.value("mode", "kpump");
    if (j.contains("params")) {
      const json& p = j["params"];
      pf.params.g = p.value("g", pf.params.g);
      pf.params.q = p.value("q", pf.params.q);
      pf.params.mu = p.value("mu", pf.params.mu);
      pf.params.seed = p.value("seed", pf.params.seed);
      pf.params.attempt_factor = p.value("attempt_factor", pf.params.attempt_factor);
      pf.params.max_tries = p.value("max_tries", pf.params.max_tries);
    }
    if (!j.contains("steps") || !j["steps"].is_array()) {
      throw ParseError("plan", "missing \"steps\" array");
    }
    for (const auto& s : j["steps"]) {
      if (!s.is_object() || !s.contains("kind") || !s.contains("motions") ||
          !s["motions"].is_array()) {
        throw ParseError("plan", "each step needs \"kind\" and \"motions\"");
      }
      PlanStep step;
      const std::string kind = s["kind"].get<std::string>();
      if (kind == "single") {
        step.kind = PlanStep::Kind::Single;
      } else if (kind == "simultaneous") {
        step.kind = PlanStep::Kind::Simultaneous;
      } else {
        throw ParseError("plan", "unknown step kind \"" + kind + "\"");
      }
      for (const auto& m : s["motions"]) step.motions.push_back(motion_from_json(m));
      pf.plan.steps.push_back(std::move(step));
    }
  } catch (const json::exception& e) {
    throw ParseError("plan", e.what());
  }
  return pf;
}

std::string plan_file_to_json(const PlanFile& pf) {
  json j;
  j["scenario"] = pf.scenario_name;
  j["mode"] = pf.mode;
  j["params"]["g"] = pf.params.g;
  j["params"]["q"] = pf.params.q;
  j["params"]["mu"] = pf.params.mu;
  j["params"]["seed"] = pf.params.seed;
  j["params"]["attempt_factor"] = pf.params.attempt_factor;
  j["params"]["max_tries"] = pf.params.max_tries;

  j["steps"] = json::array();
  for (const PlanStep& step : pf.plan.steps) {
    json s;
    s["kind"] = step.kind == PlanStep::Kind::Single ? "single" : "simultaneous";
    s["motions"] = json::array();
    for (const RobotMotion& m : step.motions) s["motions"].push_back(motion_to_json(m));
    j["steps"].push_back(std::move(s));
  }

  const verify::PlanStats stats = verify::plan_stats(pf.plan);
  j["stats"]["step_count"] = stats.step_count;
  j["stats"]["total_length"] = stats.total_length;
  j["stats"]["simultaneous_fraction"] = stats.simultaneous_fraction;
  j["stats"]["per_robot_length"] = stats.per_robot_length;
  return j.dump(2) + "\n";
}

PlanFile load_plan(const std::filesystem::path& path) {
  return plan_file_from_json(read_file(path));
}

void save_plan(const PlanFile& pf, const std::filesystem::path& path) {
  write_file(path, plan_file_to_json(pf));
}

std::string report_to_json(const verify::VerificationReport& report) {
  json j;
  j["pass"] = report.pass;
  j["steps_checked"] = report.steps_checked;
  j["violations"] = json::array();
  for (const auto& v : report.violations) {
    json e;
    e["step"] = v.step;
    e["code"] = v.code;
    e["detail"] = v.detail;
    j["violations"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace kcolor
