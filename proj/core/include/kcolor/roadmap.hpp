#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kcolor/congen.hpp"
#include "kcolor/graphgen.hpp"
#include "kcolor/plan.hpp"
#include "kcolor/scenario.hpp"

namespace kcolor::roadmap {

// Cooperative wall-clock budget, checked between planner stages.
struct Deadline {
  std::chrono::steady_clock::time_point end{};
  bool enabled = false;

  static Deadline none() { return {}; }
  static Deadline after_seconds(double seconds) {
    Deadline d;
    d.enabled = true;
    d.end = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds));
    return d;
  }
  bool expired() const { return enabled && std::chrono::steady_clock::now() >= end; }
  void check(const char* stage) const;  // throws TimedOutError
};

// The multi-graph roadmap. Nodes are deduplicated sub-configurations
// (graph id plus one sorted vertex list per color). Connection edges store
// the simultaneous motion that realizes them. Equivalence edges are not
// materialized: nodes of one graph with equal per-color signatures form a
// clique, stored as a shared bucket, and searches expand a bucket once.
// Node and edge payloads live in flat arrays indexed by fixed per-scenario
// record sizes, which keeps large roadmaps compact and cheap to copy.
class Roadmap {
 public:
  Roadmap() = default;

  // Must be called before the first insertion; fixes record sizes.
  void set_layout(std::vector<int> robots_per_color);

  // Inserts or finds the node; selection lists must be sorted per color.
  int add_node(int graph_id, const std::vector<std::vector<int>>& selection,
               const std::vector<pebble::Signature>& signature);
  int find_node(int graph_id, const std::vector<std::vector<int>>& selection) const;

  void add_connection_edge(int node_a, int node_b, const congen::Connection& conn);

  int node_count() const { return static_cast<int>(node_graph_.size()); }
  long long connection_edge_count() const { return static_cast<long long>(edge_a_.size()); }
  // Implied clique size: sum over buckets of (members choose 2).
  long long equivalence_edge_count() const;

  int node_graph(int id) const { return node_graph_[id]; }
  std::vector<std::vector<int>> node_selection(int id) const;
  bool same_bucket(int a, int b) const { return node_bucket_[a] == node_bucket_[b]; }

  int edge_node_a(int e) const { return edge_a_[e]; }
  int edge_node_b(int e) const { return edge_b_[e]; }
  congen::Connection edge_connection(int e) const;

  // One hop of a roadmap path: the node stepped onto and the connection
  // edge used, or edge == -1 for an equivalence (pebble-path) hop.
  struct Hop {
    int node = -1;
    int edge = -1;
  };

  // Fewest hops from src to dst; both edge kinds count one hop.
  std::optional<std::vector<Hop>> shortest_path(int src, int dst) const;

 private:
  std::uint64_t node_key_hash(int graph_id, const std::vector<int>& flat) const;

  std::vector<int> robots_per_color_;
  int sel_len_ = 0;

  std::vector<int> node_graph_;
  std::vector<int> sel_data_;  // sel_len_ ints per node
  std::vector<int> node_bucket_;
  std::unordered_map<std::uint64_t, int> key_head_;
  std::vector<int> key_next_;

  std::vector<std::vector<int>> bucket_members_;
  std::vector<int> bucket_graph_;
  std::vector<std::vector<int>> bucket_sig_;
  std::unordered_map<std::uint64_t, int> bucket_head_;
  std::vector<int> bucket_next_;

  std::vector<int> edge_a_;
  std::vector<int> edge_b_;
  std::vector<int> edge_conn_;  // 2 * sel_len_ ints per edge: froms, then tos
  std::vector<int> adj_head_;   // per node, first incident edge or -1
  std::vector<int> edge_next_a_;
  std::vector<int> edge_next_b_;
};

struct PlannerState {
  Scenario scenario;
  PlannerParams params;
  std::vector<graphgen::GeometricPebbleGraph> graphs;
  Roadmap roadmap;
  std::vector<std::string> warnings;
  int failed_samples = 0;
};

// Samples the composite pebble graphs and connects every unordered pair.
// Sampling and connection generation fan out over params.threads with one
// named random stream per job, merged in job order, so results match the
// single-threaded run. Throws SamplingExhaustedError only when every
// sample fails; individual failures become warnings.
PlannerState preprocess(const Scenario& sc, const PlannerParams& params,
                        const Deadline& deadline = Deadline::none());

// Generates connections between two sampled graphs and inserts them;
// returns how many were inserted. Exposed for tests and incremental use.
int connect(PlannerState& state, int graph_a, int graph_b, int q, SplitRng rng);

enum class QueryStatus { Solved, Infeasible, TimedOut };

struct QueryResult {
  QueryStatus status = QueryStatus::Infeasible;
  Plan plan;
  int roadmap_nodes = 0;
  long long connection_edges = 0;
  long long equivalence_edges = 0;
};

// Wraps starts and targets as edgeless pseudo-graphs, connects each to
// every sampled graph plus directly to each other, then searches for the
// fewest-hop node path and realizes it. Works on a copy of the roadmap,
// so a state can serve many queries, including concurrently.
QueryResult query(const PlannerState& state,
                  const std::vector<std::vector<geom::Point>>& starts,
                  const std::vector<std::vector<geom::Point>>& targets, int q,
                  const Deadline& deadline = Deadline::none());

// Realizes a hop path starting at start_node into robot motions; graphs is
// indexed by the node graph ids in the roadmap.
Plan retrieve_path(const std::vector<graphgen::GeometricPebbleGraph>& graphs,
                   const Roadmap& rm, int start_node,
                   const std::vector<Roadmap::Hop>& hops);

// Replays a pebble path as one Single plan step per move; binding maps
// pebble index to the robot that plays it.
std::vector<RobotMotion> transform_pebble_path(const graphgen::GeometricPebbleGraph& g,
                                               int color, const pebble::PebblePath& path,
                                               const std::vector<RobotId>& binding);

}  // namespace kcolor::roadmap
