#include "kcolor/pebble.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>
#include <string>

#include "kcolor/errors.hpp"

namespace kcolor::pebble {

namespace {

void check_placement(const Graph& g, const Placement& p, const char* what) {
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : p) {
    if (v < 0 || v >= g.vertex_count()) {
      throw InvalidPlacementError(std::string(what) + " references vertex " +
                                  std::to_string(v) + " outside [0, " +
                                  std::to_string(g.vertex_count()) + ")");
    }
    if (seen[v]) {
      throw InvalidPlacementError(std::string(what) + " places two pebbles on vertex " +
                                  std::to_string(v));
    }
    seen[v] = 1;
  }
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n_(vertex_count) {
  if (n_ < 0) {
    throw ValidationError("graph_bad_vertex_count",
                          "vertex count must be non-negative, got " + std::to_string(n_));
  }
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw ValidationError("graph_vertex_out_of_range",
                            "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") outside [0, " + std::to_string(n_) + ")");
    }
    if (u == v) {
      throw ValidationError("graph_self_loop", "self loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  edges_ = std::move(edge_list);

  adj_.resize(n_);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

  // Labels in order of each component's smallest vertex id.
  component_.assign(n_, -1);
  for (int v = 0; v < n_; ++v) {
    if (component_[v] >= 0) continue;
    component_[v] = component_count_;
    std::deque<int> queue{v};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adj_[u]) {
        if (component_[w] < 0) {
          component_[w] = component_count_;
          queue.push_back(w);
        }
      }
    }
    ++component_count_;
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Placement PebblePath::final_placement() const {
  Placement p = start;
  for (const Move& m : moves) p[m.pebble] = m.to;
  return p;
}

Signature signature(const Graph& g, const Placement& p) {
  check_placement(g, p, "placement");
  Signature counts(g.component_count(), 0);
  for (int v : p) ++counts[g.component_of(v)];
  return counts;
}

bool equivalent(const Graph& g, const Placement& a, const Placement& b) {
  if (a.size() != b.size()) {
    throw SizeMismatchError("placements have sizes " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
  }
  return signature(g, a) == signature(g, b);
}

PebblePath pebble_solve(const Graph& g, const Placement& s, const Placement& t) {
  check_placement(g, s, "start placement");
  check_placement(g, t, "target placement");
  if (s.size() != t.size()) {
    throw SizeMismatchError("start has " + std::to_string(s.size()) +
                            " pebbles, target has " + std::to_string(t.size()));
  }
  if (signature(g, s) != signature(g, t)) {
    throw NotEquivalentError("start and target differ in per-component pebble counts");
  }

  const int n = g.vertex_count();
  PebblePath path{s, {}};

  std::vector<int> pebble_at(n, -1);
  for (std::size_t i = 0; i < s.size(); ++i) pebble_at[s[i]] = static_cast<int>(i);
  std::vector<char> is_target(n, 0);
  for (int v : t) is_target[v] = 1;

  auto emit = [&](int from, int to) {
    path.moves.push_back({pebble_at[from], from, to});
    pebble_at[to] = pebble_at[from];
    pebble_at[from] = -1;
  };

  std::vector<char> alive(n, 0);
  std::vector<int> depth(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> tdeg(n, 0);
  std::vector<std::vector<int>> tree_adj(n);
  std::vector<int> bfs_parent(n, -1);
  std::vector<char> bfs_seen(n, 0);

  // Shortest alive-tree path from `from` to the nearest vertex satisfying
  // `pred`; neighbor order is ascending, so ties resolve deterministically.
  auto bfs_path = [&](int from, auto pred) {
    std::deque<int> queue{from};
    bfs_seen[from] = 1;
    bfs_parent[from] = -1;
    int found = -1;
    std::vector<int> touched{from};
    while (!queue.empty() && found < 0) {
      const int u = queue.front();
      queue.pop_front();
      if (pred(u)) {
        found = u;
        break;
      }
      for (int w : tree_adj[u]) {
        if (alive[w] && !bfs_seen[w]) {
          bfs_seen[w] = 1;
          bfs_parent[w] = u;
          queue.push_back(w);
          touched.push_back(w);
        }
      }
    }
    if (found < 0) throw InternalError("pebble solver lost a reachable vertex");
    std::vector<int> result;
    for (int u = found; u >= 0; u = bfs_parent[u]) result.push_back(u);
    std::reverse(result.begin(), result.end());  // from .. found
    for (int u : touched) bfs_seen[u] = 0;
    return result;
  };

  for (int comp = 0; comp < g.component_count(); ++comp) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) {
      if (g.component_of(v) == comp) verts.push_back(v);
    }
    const int root = verts.front();

    // Breadth-first spanning tree rooted at the smallest vertex id.
    for (int v : verts) {
      tree_adj[v].clear();
      depth[v] = -1;
      parent[v] = -1;
      alive[v] = 1;
    }
    depth[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    for (int v : verts) {
      if (v != root) {
        tree_adj[v].push_back(parent[v]);
        tree_adj[parent[v]].push_back(v);
      }
    }
    for (int v : verts) {
      std::sort(tree_adj[v].begin(), tree_adj[v].end());
      tdeg[v] = static_cast<int>(tree_adj[v].size());
    }

    // Peel leaves off the spanning tree, deepest first. A target leaf gets
    // the nearest pebble pulled onto it; an occupied non-target leaf pushes
    // its pebble chain toward the nearest hole. The remaining alive set
    // always carries as many pebbles as unfinished targets, which makes
    // both searches succeed.
    int alive_count = static_cast<int>(verts.size());
    while (alive_count > 1) {
      int v = -1;
      for (int u : verts) {
        if (!alive[u] || tdeg[u] > 1) continue;
        if (v < 0 || depth[u] > depth[v] || (depth[u] == depth[v] && u < v)) v = u;
      }
      if (v < 0) throw InternalError("alive subtree has no leaf");

      if (is_target[v]) {
        if (pebble_at[v] < 0) {
          const auto chain = bfs_path(v, [&](int u) { return pebble_at[u] >= 0; });
          for (std::size_t i = chain.size() - 1; i > 0; --i) emit(chain[i], chain[i - 1]);
        }
      } else if (pebble_at[v] >= 0) {
        const auto chain = bfs_path(v, [&](int u) { return pebble_at[u] < 0; });
        for (std::size_t i = chain.size() - 1; i > 0; --i) emit(chain[i - 1], chain[i]);
      }

      alive[v] = 0;
      --alive_count;
      for (int w : tree_adj[v]) {
        if (alive[w]) --tdeg[w];
      }
    }
  }
  return path;
}

bool validate_pebble_path(const Graph& g, const PebblePath& path, const Placement& t) {
  const int n = g.vertex_count();
  std::vector<int> occupant(n, -1);
  std::vector<int> pos(path.start.size(), -1);
  for (std::size_t i = 0; i < path.start.size(); ++i) {
    const int v = path.start[i];
    if (v < 0 || v >= n || occupant[v] >= 0) return false;
    occupant[v] = static_cast<int>(i);
    pos[i] = v;
  }
  for (const Move& m : path.moves) {
    if (m.pebble < 0 || m.pebble >= static_cast<int>(pos.size())) return false;
    if (pos[m.pebble] != m.from) return false;
    if (m.to < 0 || m.to >= n || occupant[m.to] >= 0) return false;
    if (!g.has_edge(m.from, m.to)) return false;
    occupant[m.from] = -1;
    occupant[m.to] = m.pebble;
    pos[m.pebble] = m.to;
  }
  Placement final_sorted = pos;
  Placement target_sorted = t;
  std::sort(final_sorted.begin(), final_sorted.end());
  std::sort(target_sorted.begin(), target_sorted.end());
  if (target_sorted.size() != final_sorted.size()) return false;
  for (std::size_t i = 0; i + 1 < target_sorted.size(); ++i) {
    if (target_sorted[i] == target_sorted[i + 1]) return false;
  }
  for (int v : target_sorted) {
    if (v < 0 || v >= n) return false;
  }
  return final_sorted == target_sorted;
}

PebbleInstance parse_pebble_instance(std::istream& in) {
  std::vector<std::pair<std::string, int>> lines;  // text, 1-based line number
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    lines.emplace_back(raw, lineno);
  }

  auto fail = [](int line, const std::string& msg) -> void {
    throw ParseError("line " + std::to_string(line), msg);
  };

  std::size_t idx = 0;
  auto next_line = [&]() -> const std::pair<std::string, int>& {
    if (idx >= lines.size()) {
      throw ParseError("end of input", "incomplete pebble instance");
    }
    return lines[idx++];
  };

  const auto& header = next_line();
  int n = 0;
  int m = 0;
  {
    std::istringstream ss(header.first);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra)) {
      fail(header.second, "expected header \"n m\"");
    }
    if (m < 0) fail(header.second, "edge count must be non-negative");
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    const auto& line = next_line();
    std::istringstream ss(line.first);
    int u = 0;
    int v = 0;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) {
      fail(line.second, "expected edge \"u v\"");
    }
    edges.emplace_back(u, v);
  }

  auto parse_placement = [&](const char* tag) {
    const auto& line = next_line();
    std::istringstream ss(line.first);
    std::string head;
    ss >> head;
    if (head != tag) {
      fail(line.second, std::string("expected line starting with \"") + tag + "\"");
    }
    Placement p;
    int v = 0;
    while (ss >> v) p.push_back(v);
    if (!ss.eof()) fail(line.second, "expected vertex ids");
    return p;
  };

  PebbleInstance inst;
  Placement start = parse_placement("S:");
  Placement target = parse_placement("T:");
  if (idx != lines.size()) {
    fail(lines[idx].second, "unexpected trailing content");
  }

  inst.graph = Graph(n, std::move(edges));
  inst.start = std::move(start);
  inst.target = std::move(target);
  return inst;
}

}  // namespace kcolor::pebble
