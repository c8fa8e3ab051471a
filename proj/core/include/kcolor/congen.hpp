#pragma once

#include <utility>
#include <vector>

#include "kcolor/geom.hpp"
#include "kcolor/graphgen.hpp"
#include "kcolor/pebble.hpp"
#include "kcolor/rng.hpp"

namespace kcolor::congen {

// One robot of `color` moving straight from point from_vertex of pumped set
// A to point to_vertex of pumped set B, obstacle-checked only; clearance to
// other moving robots is the interference predicate's job.
struct CandidatePair {
  int color = 0;
  int from_vertex = 0;
  int to_vertex = 0;
  double radius = 0.0;
  geom::LinearMotion motion;
};

// Exact predicate: the two motions cannot run on the same clock iff their
// minimum center distance drops below the sum of radii, or they are the
// same color sharing an endpoint on either side.
bool interferes(const CandidatePair& a, const CandidatePair& b);

// All obstacle-free straight candidates between matching colors of A and B.
std::vector<CandidatePair> candidate_pairs(const graphgen::CompositePumpedConfiguration& a,
                                           const graphgen::CompositePumpedConfiguration& b,
                                           const geom::Workspace& w);

struct InterferenceGraph {
  std::vector<CandidatePair> nodes;
  std::vector<std::pair<int, int>> conflicts;  // index pairs, i < j
};

InterferenceGraph build_interference_graph(const graphgen::CompositePumpedConfiguration& a,
                                           const graphgen::CompositePumpedConfiguration& b,
                                           const geom::Workspace& w);

// Simultaneous motion of all robots from a sub-configuration of A to one of
// B: per color, slot j moves from_vertices[j] to to_vertices[j]. Slots are
// ordered by from vertex; the selections each side are the sorted vertex
// lists.
struct Connection {
  struct ColorPart {
    std::vector<int> from_vertices;
    std::vector<int> to_vertices;
  };
  std::vector<ColorPart> per_color;
};

bool operator==(const Connection& a, const Connection& b);

// Up to q distinct connections between A and B. Each attempt greedily packs
// a random permutation of the candidates, keeping a candidate iff it does
// not interfere with those already kept and its color still needs robots;
// an attempt succeeds when every color fills its robot count. Distinctness
// is by the pair of per-color endpoint selections. Runs attempt_factor * q
// attempts and returns connections in discovery order.
std::vector<Connection> congen(const graphgen::CompositePumpedConfiguration& a,
                               const graphgen::CompositePumpedConfiguration& b, int q,
                               const geom::Workspace& w, SplitRng& rng,
                               int attempt_factor = 20);

// Per-color component signature of a selection on g, using the cached
// component labels.
std::vector<pebble::Signature> signature_of_selection(
    const graphgen::GeometricPebbleGraph& g, const std::vector<std::vector<int>>& selection);

}  // namespace kcolor::congen
