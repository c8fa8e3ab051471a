#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

namespace kcolor::pebble {

// Undirected simple graph with cached connected components. Adjacency lists
// are sorted ascending and component labels are assigned in order of each
// component's smallest vertex id, so everything downstream is deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return n_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int component_of(int v) const { return component_[v]; }
  int component_count() const { return component_count_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;  // sorted, u < v
  std::vector<int> component_;
  int component_count_ = 0;
};

// Placement: entry i is the vertex occupied by pebble i. Valid placements
// have in-range, pairwise distinct entries.
using Placement = std::vector<int>;

// Per-component pebble counts, indexed by component label.
using Signature = std::vector<int>;

struct Move {
  int pebble;
  int from;
  int to;
};

inline bool operator==(const Move& a, const Move& b) {
  return a.pebble == b.pebble && a.from == b.from && a.to == b.to;
}

struct PebblePath {
  Placement start;
  std::vector<Move> moves;

  Placement final_placement() const;
};

// Throws InvalidPlacementError if p is not a valid placement on g.
Signature signature(const Graph& g, const Placement& p);

// Placements are interchangeable by single-pebble moves iff their
// signatures match. Throws SizeMismatchError on unequal sizes.
bool equivalent(const Graph& g, const Placement& a, const Placement& b);

// Moves the pebbles of s onto the vertex set of t, one pebble per step;
// which pebble ends on which target vertex is not prescribed. Works leaf
// to root over a breadth-first spanning tree of each component. Throws
// NotEquivalentError when the signatures differ.
PebblePath pebble_solve(const Graph& g, const Placement& s, const Placement& t);

// True iff the path starts at a valid placement, every move slides one
// pebble along a graph edge onto an empty vertex, and the final occupied
// set equals the vertex set of t.
bool validate_pebble_path(const Graph& g, const PebblePath& path, const Placement& t);

struct PebbleInstance {
  Graph graph;
  Placement start;
  Placement target;
};

// Text format: first line "n m", then m lines "u v", then "S: v1 v2 ..."
// and "T: v1 v2 ...". Blank lines and lines starting with '#' are skipped.
PebbleInstance parse_pebble_instance(std::istream& in);

}  // namespace kcolor::pebble
