#include "kcolor/congen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "kcolor/errors.hpp"

namespace kcolor::congen {

namespace {

// Planner-side variant with the safety slack folded in, so kept sets stay
// strictly clear of the exact interference boundary.
bool conflicts_with_margin(const CandidatePair& a, const CandidatePair& b) {
  if (a.color == b.color &&
      (a.from_vertex == b.from_vertex || a.to_vertex == b.to_vertex)) {
    return true;
  }
  return geom::min_dist_linear_motions(a.motion, b.motion) <
         a.radius + b.radius + geom::kSafetyMargin;
}

}  // namespace

bool interferes(const CandidatePair& a, const CandidatePair& b) {
  if (a.color == b.color &&
      (a.from_vertex == b.from_vertex || a.to_vertex == b.to_vertex)) {
    return true;
  }
  return geom::min_dist_linear_motions(a.motion, b.motion) < a.radius + b.radius;
}

std::vector<CandidatePair> candidate_pairs(const graphgen::CompositePumpedConfiguration& a,
                                           const graphgen::CompositePumpedConfiguration& b,
                                           const geom::Workspace& w) {
  if (a.color_count() != b.color_count()) {
    throw InternalError("pumped configurations disagree on color count");
  }
  std::vector<CandidatePair> out;
  for (int i = 0; i < a.color_count(); ++i) {
    const auto& ca = a.per_color[i];
    const auto& cb = b.per_color[i];
    if (ca.radius != cb.radius || ca.robot_count != cb.robot_count) {
      throw InternalError("pumped configurations disagree on color " + std::to_string(i));
    }
    for (int u = 0; u < ca.size(); ++u) {
      for (int v = 0; v < cb.size(); ++v) {
        const geom::LinearMotion m{ca.points[u], cb.points[v]};
        if (geom::sweep_free(m, ca.radius + geom::kSafetyMargin, w)) {
          out.push_back({i, u, v, ca.radius, m});
        }
      }
    }
  }
  return out;
}

InterferenceGraph build_interference_graph(const graphgen::CompositePumpedConfiguration& a,
                                           const graphgen::CompositePumpedConfiguration& b,
                                           const geom::Workspace& w) {
  InterferenceGraph ig;
  ig.nodes = candidate_pairs(a, b, w);
  for (std::size_t i = 0; i < ig.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < ig.nodes.size(); ++j) {
      if (interferes(ig.nodes[i], ig.nodes[j])) {
        ig.conflicts.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return ig;
}

bool operator==(const Connection& a, const Connection& b) {
  if (a.per_color.size() != b.per_color.size()) return false;
  for (std::size_t i = 0; i < a.per_color.size(); ++i) {
    if (a.per_color[i].from_vertices != b.per_color[i].from_vertices ||
        a.per_color[i].to_vertices != b.per_color[i].to_vertices) {
      return false;
    }
  }
  return true;
}

std::vector<Connection> congen(const graphgen::CompositePumpedConfiguration& a,
                               const graphgen::CompositePumpedConfiguration& b, int q,
                               const geom::Workspace& w, SplitRng& rng,
                               int attempt_factor) {
  if (q < 1) throw ValidationError("q_not_positive", "connection budget must be >= 1");
  const std::vector<CandidatePair> nodes = candidate_pairs(a, b, w);
  const int k = a.color_count();

  std::vector<int> need(k);
  for (int i = 0; i < k; ++i) need[i] = a.per_color[i].robot_count;
  const int total_need = std::accumulate(need.begin(), need.end(), 0);

  // A color whose candidates cannot even cover its robot count on either
  // side can never fill, so no attempt can succeed.
  {
    std::vector<std::set<int>> froms(k), tos(k);
    for (const auto& nd : nodes) {
      froms[nd.color].insert(nd.from_vertex);
      tos[nd.color].insert(nd.to_vertex);
    }
    for (int i = 0; i < k; ++i) {
      if (static_cast<int>(froms[i].size()) < need[i] ||
          static_cast<int>(tos[i].size()) < need[i]) {
        return {};
      }
    }
  }

  std::vector<Connection> results;
  std::set<std::vector<int>> seen;  // flattened selection pairs
  std::vector<int> order(nodes.size());
  std::vector<int> accepted;
  std::vector<int> fill(k);

  const long long attempts = static_cast<long long>(attempt_factor) * q;
  for (long long attempt = 0; attempt < attempts; ++attempt) {
    if (static_cast<int>(results.size()) >= q) break;
    std::iota(order.begin(), order.end(), 0);
    std::fill(fill.begin(), fill.end(), 0);
    accepted.clear();
    int missing = total_need;

    // Lazy prefix of a Fisher-Yates shuffle: position pos gets a uniform
    // pick from the unvisited tail, so scanning the prefix in order walks
    // a uniform random permutation without paying for the full shuffle
    // once every color has filled.
    for (std::size_t pos = 0; pos < order.size() && missing > 0; ++pos) {
      const std::size_t j = pos + static_cast<std::size_t>(rng.next_below(order.size() - pos));
      std::swap(order[pos], order[j]);
      const CandidatePair& cand = nodes[order[pos]];
      if (fill[cand.color] == need[cand.color]) continue;
      bool clear = true;
      for (int idx : accepted) {
        if (conflicts_with_margin(cand, nodes[idx])) {
          clear = false;
          break;
        }
      }
      if (!clear) continue;
      accepted.push_back(order[pos]);
      ++fill[cand.color];
      --missing;
    }
    if (missing > 0) continue;

    Connection conn;
    conn.per_color.resize(k);
    for (int i = 0; i < k; ++i) {
      std::vector<std::pair<int, int>> slots;
      for (int idx : accepted) {
        if (nodes[idx].color == i) {
          slots.emplace_back(nodes[idx].from_vertex, nodes[idx].to_vertex);
        }
      }
      std::sort(slots.begin(), slots.end());
      for (auto [f, t] : slots) {
        conn.per_color[i].from_vertices.push_back(f);
        conn.per_color[i].to_vertices.push_back(t);
      }
    }

    std::vector<int> key;
    for (int i = 0; i < k; ++i) {
      std::vector<int> f = conn.per_color[i].from_vertices;
      std::vector<int> t = conn.per_color[i].to_vertices;
      std::sort(f.begin(), f.end());
      std::sort(t.begin(), t.end());
      key.insert(key.end(), f.begin(), f.end());
      key.push_back(-1);
      key.insert(key.end(), t.begin(), t.end());
      key.push_back(-2);
    }
    if (seen.insert(std::move(key)).second) {
      results.push_back(std::move(conn));
    }
  }
  return results;
}

std::vector<pebble::Signature> signature_of_selection(
    const graphgen::GeometricPebbleGraph& g,
    const std::vector<std::vector<int>>& selection) {
  std::vector<pebble::Signature> sigs;
  sigs.reserve(selection.size());
  for (std::size_t i = 0; i < selection.size(); ++i) {
    sigs.push_back(pebble::signature(g.graphs[i], selection[i]));
  }
  return sigs;
}

}  // namespace kcolor::congen
