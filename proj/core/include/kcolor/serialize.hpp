#pragma once

#include <filesystem>
#include <string>

#include "kcolor/plan.hpp"
#include "kcolor/scenario.hpp"
#include "kcolor/verify.hpp"

namespace kcolor {

// Scenario JSON:
// {
//   "name": "...",                               optional
//   "workspace": {
//     "boundary": [[x, y], ...],
//     "obstacles": [[[x, y], ...], ...]
//   },
//   "colors": [
//     {"radius": r, "starts": [[x, y], ...], "targets": [[x, y], ...]},
//     ...
//   ]
// }
Scenario scenario_from_json(const std::string& text, const std::string& name_hint = "");
std::string scenario_to_json(const Scenario& sc);
Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& sc, const std::filesystem::path& path);

struct PlanFile {
  std::string scenario_name;
  std::string mode;  // "kpump" or "kbasic"
  PlannerParams params;
  Plan plan;
};

// Plan JSON carries the provenance header, the steps, and a stats echo
// (recomputed on save, ignored on load). Keys are emitted in sorted order
// and doubles round-trip exactly, so equal plans serialize byte-identically.
PlanFile plan_file_from_json(const std::string& text);
std::string plan_file_to_json(const PlanFile& pf);
PlanFile load_plan(const std::filesystem::path& path);
void save_plan(const PlanFile& pf, const std::filesystem::path& path);

std::string report_to_json(const verify::VerificationReport& report);

}  // namespace kcolor
