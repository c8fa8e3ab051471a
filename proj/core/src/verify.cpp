#include "kcolor/verify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "kcolor/errors.hpp"

namespace kcolor::verify {

namespace {

std::string robot_name(RobotId id) {
  return "robot (" + std::to_string(id.color) + ", " + std::to_string(id.index) + ")";
}

}  // namespace

VerificationReport verify_plan(const Scenario& sc, const Plan& plan, double eps) {
  VerificationReport rep;
  auto add = [&](int step, const char* code, std::string detail) {
    rep.violations.push_back({step, code, std::move(detail)});
  };

  const int k = sc.color_count();
  const int total = sc.total_robots();
  std::vector<std::vector<geom::Point>> pos(k);
  std::vector<std::vector<char>> moved(k);
  for (int i = 0; i < k; ++i) {
    pos[i] = sc.groups[i].starts;
    moved[i].assign(pos[i].size(), 0);
  }

  auto valid_robot = [&](RobotId id) {
    return id.color >= 0 && id.color < k && id.index >= 0 &&
           id.index < sc.groups[id.color].robot_count();
  };

  for (std::size_t si = 0; si < plan.steps.size(); ++si) {
    const PlanStep& step = plan.steps[si];
    const int step_idx = static_cast<int>(si);

    if (step.kind == PlanStep::Kind::Single) {
      if (step.motions.size() != 1) {
        add(step_idx, "bad_structure",
            "single step lists " + std::to_string(step.motions.size()) + " motions");
      }
    } else {
      if (static_cast<int>(step.motions.size()) != total) {
        add(step_idx, "bad_structure",
            "simultaneous step lists " + std::to_string(step.motions.size()) +
                " motions for " + std::to_string(total) + " robots");
      }
      std::set<std::pair<int, int>> seen;
      for (const RobotMotion& m : step.motions) {
        if (valid_robot(m.robot) && !seen.insert({m.robot.color, m.robot.index}).second) {
          add(step_idx, "bad_structure", robot_name(m.robot) + " appears twice");
        }
      }
    }

    // Continuity first, then collisions, then commit the new positions.
    for (const RobotMotion& m : step.motions) {
      if (!valid_robot(m.robot)) {
        add(step_idx, "bad_structure", robot_name(m.robot) + " is not in the scenario");
        continue;
      }
      const geom::Point cur = pos[m.robot.color][m.robot.index];
      if (geom::distance(m.motion.from, cur) > eps) {
        const char* code =
            moved[m.robot.color][m.robot.index] ? "discontinuity" : "start_mismatch";
        add(step_idx, code,
            robot_name(m.robot) + " starts its motion away from its position");
      }
    }

    for (const RobotMotion& m : step.motions) {
      if (!valid_robot(m.robot)) continue;
      const double r = sc.groups[m.robot.color].radius;
      if (!geom::sweep_free(m.motion, r, sc.workspace)) {
        add(step_idx, "workspace_collision",
            robot_name(m.robot) + " hits the boundary or an obstacle");
      }
    }

    if (step.kind == PlanStep::Kind::Single && step.motions.size() == 1 &&
        valid_robot(step.motions.front().robot)) {
      const RobotMotion& m = step.motions.front();
      const double r = sc.groups[m.robot.color].radius;
      for (int i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < pos[i].size(); ++j) {
          if (i == m.robot.color && static_cast<int>(j) == m.robot.index) continue;
          const double need = r + sc.groups[i].radius;
          if (geom::dist_point_segment(pos[i][j], m.motion.from, m.motion.to) < need) {
            add(step_idx, "robot_collision",
                robot_name(m.robot) + " passes through robot (" + std::to_string(i) +
                    ", " + std::to_string(j) + ")");
          }
        }
      }
    } else if (step.kind == PlanStep::Kind::Simultaneous) {
      for (std::size_t a = 0; a < step.motions.size(); ++a) {
        if (!valid_robot(step.motions[a].robot)) continue;
        for (std::size_t b = a + 1; b < step.motions.size(); ++b) {
          if (!valid_robot(step.motions[b].robot)) continue;
          const double need = sc.groups[step.motions[a].robot.color].radius +
                              sc.groups[step.motions[b].robot.color].radius;
          if (geom::min_dist_linear_motions(step.motions[a].motion, step.motions[b].motion) <
              need) {
            add(step_idx, "robot_collision",
                robot_name(step.motions[a].robot) + " and " +
                    robot_name(step.motions[b].robot) + " collide mid-motion");
          }
        }
      }
    }

    for (const RobotMotion& m : step.motions) {
      if (!valid_robot(m.robot)) continue;
      pos[m.robot.color][m.robot.index] = m.motion.to;
      moved[m.robot.color][m.robot.index] = 1;
    }
  }

  // Final positions must match the target multiset per color: greedily bind
  // each robot to the nearest unused target and demand it lie within eps.
  for (int i = 0; i < k; ++i) {
    std::vector<char> used(sc.groups[i].targets.size(), 0);
    for (std::size_t j = 0; j < pos[i].size(); ++j) {
      int best = -1;
      double best_d = 0.0;
      for (std::size_t ti = 0; ti < sc.groups[i].targets.size(); ++ti) {
        if (used[ti]) continue;
        const double d = geom::distance(pos[i][j], sc.groups[i].targets[ti]);
        if (best < 0 || d < best_d) {
          best = static_cast<int>(ti);
          best_d = d;
        }
      }
      if (best < 0 || best_d > eps) {
        add(-1, "target_mismatch",
            "robot (" + std::to_string(i) + ", " + std::to_string(j) +
                ") ends away from every unclaimed target of its color");
      } else {
        used[best] = 1;
      }
    }
  }

  rep.steps_checked = static_cast<int>(plan.steps.size());
  rep.pass = rep.violations.empty();
  return rep;
}

PebbleReachability brute_force_pebble_oracle(const pebble::Graph& g,
                                             const pebble::Placement& s,
                                             const pebble::Placement& t,
                                             std::uint64_t state_limit) {
  // signature() performs full placement validation.
  (void)pebble::signature(g, s);
  (void)pebble::signature(g, t);
  if (s.size() != t.size()) {
    throw SizeMismatchError("start has " + std::to_string(s.size()) +
                            " pebbles, target has " + std::to_string(t.size()));
  }

  std::vector<int> start = s;
  std::vector<int> goal = t;
  std::sort(start.begin(), start.end());
  std::sort(goal.begin(), goal.end());
  if (start == goal) return {true, 0};

  std::set<std::vector<int>> visited{start};
  std::deque<std::pair<std::vector<int>, int>> queue{{start, 0}};
  while (!queue.empty()) {
    const auto [state, depth] = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < state.size(); ++i) {
      for (int w : g.neighbors(state[i])) {
        if (std::binary_search(state.begin(), state.end(), w)) continue;
        std::vector<int> next = state;
        next[i] = w;
        std::sort(next.begin(), next.end());
        if (next == goal) return {true, depth + 1};
        if (visited.insert(next).second) {
          if (visited.size() > state_limit) {
            throw StateSpaceTooLargeError("pebble oracle exceeded " +
                                          std::to_string(state_limit) + " states");
          }
          queue.emplace_back(std::move(next), depth + 1);
        }
      }
    }
  }
  return {false, -1};
}

PlanStats plan_stats(const Plan& plan, const std::vector<int>& robots_per_color) {
  PlanStats st;
  st.step_count = static_cast<int>(plan.steps.size());

  std::vector<int> counts = robots_per_color;
  for (const PlanStep& step : plan.steps) {
    for (const RobotMotion& m : step.motions) {
      if (m.robot.color < 0 || m.robot.index < 0) continue;
      if (m.robot.color >= static_cast<int>(counts.size())) {
        counts.resize(static_cast<std::size_t>(m.robot.color) + 1, 0);
      }
      counts[m.robot.color] = std::max(counts[m.robot.color], m.robot.index + 1);
    }
  }
  st.per_robot_length.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    st.per_robot_length[i].assign(static_cast<std::size_t>(counts[i]), 0.0);
  }

  int simultaneous = 0;
  for (const PlanStep& step : plan.steps) {
    if (step.kind == PlanStep::Kind::Simultaneous) ++simultaneous;
    for (const RobotMotion& m : step.motions) {
      if (m.robot.color < 0 || m.robot.index < 0) continue;
      const double len = m.motion.length();
      st.total_length += len;
      st.per_robot_length[m.robot.color][m.robot.index] += len;
    }
  }
  st.simultaneous_fraction =
      plan.steps.empty() ? 0.0 : static_cast<double>(simultaneous) / st.step_count;
  return st;
}

}  // namespace kcolor::verify
