#pragma once

#include <string>

#include "kcolor/plan.hpp"
#include "kcolor/scenario.hpp"

namespace kcolor::svg {

struct SvgOptions {
  double seconds_per_step = 0.5;
  double margin = 1.0;   // workspace units around the bounding box
  double scale = 24.0;   // pixels per workspace unit
};

// Standalone SVG of the scenario: boundary, obstacles, start discs and
// target rings per color. With a plan, robots additionally replay the
// steps on a looping SMIL timeline, one step per time slot.
std::string render(const Scenario& sc, const Plan* plan = nullptr,
                   const SvgOptions& opts = {});

}  // namespace kcolor::svg
