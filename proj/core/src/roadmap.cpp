#include "kcolor/roadmap.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <thread>

#include "kcolor/errors.hpp"

namespace kcolor::roadmap {

void Deadline::check(const char* stage) const {
  if (expired()) {
    throw TimedOutError(std::string("deadline expired during ") + stage);
  }
}

namespace {

std::uint64_t fnv_step(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

// Runs fn(0..count-1) on up to `threads` workers. Job payloads must write
// only to their own slot; the caller merges in index order afterwards, so
// outputs do not depend on scheduling. The lowest-index exception wins.
template <typename Fn>
void run_jobs(int count, int threads, const Deadline& deadline, const char* stage, Fn&& fn) {
  if (count <= 0) return;
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) {
      deadline.check(stage);
      fn(i);
    }
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> timed_out{false};
  std::atomic<bool> failed{false};
  std::mutex err_mu;
  std::exception_ptr first_err;
  int first_err_job = count;
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count || failed.load() || timed_out.load()) return;
      if (deadline.expired()) {
        timed_out.store(true);
        return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (i < first_err_job) {
          first_err_job = i;
          first_err = std::current_exception();
        }
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int nt = std::min(threads, count);
  pool.reserve(static_cast<std::size_t>(nt));
  for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_err) std::rethrow_exception(first_err);
  if (timed_out.load()) {
    throw TimedOutError(std::string("deadline expired during ") + stage);
  }
}

}  // namespace

void Roadmap::set_layout(std::vector<int> robots_per_color) {
  if (node_count() > 0) throw InternalError("layout change on a non-empty roadmap");
  robots_per_color_ = std::move(robots_per_color);
  sel_len_ = 0;
  for (int m : robots_per_color_) sel_len_ += m;
}

std::uint64_t Roadmap::node_key_hash(int graph_id, const std::vector<int>& flat) const {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv_step(h, static_cast<std::uint64_t>(graph_id));
  for (int v : flat) h = fnv_step(h, static_cast<std::uint64_t>(v) + 1);
  return h;
}

int Roadmap::add_node(int graph_id, const std::vector<std::vector<int>>& selection,
                      const std::vector<pebble::Signature>& signature) {
  if (selection.size() != robots_per_color_.size()) {
    throw InternalError("selection has wrong color count");
  }
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(sel_len_));
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (static_cast<int>(selection[i].size()) != robots_per_color_[i]) {
      throw InternalError("selection size mismatch for color " + std::to_string(i));
    }
    if (!std::is_sorted(selection[i].begin(), selection[i].end())) {
      throw InternalError("selection lists must be sorted");
    }
    flat.insert(flat.end(), selection[i].begin(), selection[i].end());
  }

  const std::uint64_t h = node_key_hash(graph_id, flat);
  const auto it = key_head_.find(h);
  if (it != key_head_.end()) {
    for (int v = it->second; v >= 0; v = key_next_[v]) {
      if (node_graph_[v] == graph_id &&
          std::equal(flat.begin(), flat.end(),
                     sel_data_.begin() + static_cast<std::size_t>(v) * sel_len_)) {
        return v;
      }
    }
  }

  const int id = node_count();
  node_graph_.push_back(graph_id);
  sel_data_.insert(sel_data_.end(), flat.begin(), flat.end());
  key_next_.push_back(it == key_head_.end() ? -1 : it->second);
  key_head_[h] = id;
  adj_head_.push_back(-1);

  std::vector<int> flat_sig;
  for (const auto& s : signature) {
    flat_sig.insert(flat_sig.end(), s.begin(), s.end());
    flat_sig.push_back(-1);  // color separator
  }
  const std::uint64_t bh = node_key_hash(graph_id, flat_sig);
  int bucket = -1;
  const auto bit = bucket_head_.find(bh);
  if (bit != bucket_head_.end()) {
    for (int b = bit->second; b >= 0; b = bucket_next_[b]) {
      if (bucket_graph_[b] == graph_id && bucket_sig_[b] == flat_sig) {
        bucket = b;
        break;
      }
    }
  }
  if (bucket < 0) {
    bucket = static_cast<int>(bucket_members_.size());
    bucket_members_.emplace_back();
    bucket_graph_.push_back(graph_id);
    bucket_sig_.push_back(std::move(flat_sig));
    bucket_next_.push_back(bit == bucket_head_.end() ? -1 : bit->second);
    bucket_head_[bh] = bucket;
  }
  bucket_members_[bucket].push_back(id);
  node_bucket_.push_back(bucket);
  return id;
}

int Roadmap::find_node(int graph_id, const std::vector<std::vector<int>>& selection) const {
  std::vector<int> flat;
  for (const auto& s : selection) flat.insert(flat.end(), s.begin(), s.end());
  const std::uint64_t h = node_key_hash(graph_id, flat);
  const auto it = key_head_.find(h);
  if (it == key_head_.end()) return -1;
  for (int v = it->second; v >= 0; v = key_next_[v]) {
    if (node_graph_[v] == graph_id &&
        std::equal(flat.begin(), flat.end(),
                   sel_data_.begin() + static_cast<std::size_t>(v) * sel_len_)) {
      return v;
    }
  }
  return -1;
}

void Roadmap::add_connection_edge(int node_a, int node_b, const congen::Connection& conn) {
  if (node_a == node_b) throw InternalError("connection edge endpoints coincide");
  const int e = static_cast<int>(edge_a_.size());
  edge_a_.push_back(node_a);
  edge_b_.push_back(node_b);
  for (const auto& pc : conn.per_color) {
    edge_conn_.insert(edge_conn_.end(), pc.from_vertices.begin(), pc.from_vertices.end());
  }
  for (const auto& pc : conn.per_color) {
    edge_conn_.insert(edge_conn_.end(), pc.to_vertices.begin(), pc.to_vertices.end());
  }
  edge_next_a_.push_back(adj_head_[node_a]);
  adj_head_[node_a] = e;
  edge_next_b_.push_back(adj_head_[node_b]);
  adj_head_[node_b] = e;
}

long long Roadmap::equivalence_edge_count() const {
  long long total = 0;
  for (const auto& members : bucket_members_) {
    const long long s = static_cast<long long>(members.size());
    total += s * (s - 1) / 2;
  }
  return total;
}

std::vector<std::vector<int>> Roadmap::node_selection(int id) const {
  std::vector<std::vector<int>> sel(robots_per_color_.size());
  std::size_t off = static_cast<std::size_t>(id) * sel_len_;
  for (std::size_t i = 0; i < robots_per_color_.size(); ++i) {
    sel[i].assign(sel_data_.begin() + off, sel_data_.begin() + off + robots_per_color_[i]);
    off += robots_per_color_[i];
  }
  return sel;
}

congen::Connection Roadmap::edge_connection(int e) const {
  congen::Connection conn;
  conn.per_color.resize(robots_per_color_.size());
  std::size_t off = static_cast<std::size_t>(e) * 2 * sel_len_;
  for (std::size_t i = 0; i < robots_per_color_.size(); ++i) {
    conn.per_color[i].from_vertices.assign(edge_conn_.begin() + off,
                                           edge_conn_.begin() + off + robots_per_color_[i]);
    off += robots_per_color_[i];
  }
  for (std::size_t i = 0; i < robots_per_color_.size(); ++i) {
    conn.per_color[i].to_vertices.assign(edge_conn_.begin() + off,
                                         edge_conn_.begin() + off + robots_per_color_[i]);
    off += robots_per_color_[i];
  }
  return conn;
}

std::optional<std::vector<Roadmap::Hop>> Roadmap::shortest_path(int src, int dst) const {
  if (src == dst) return std::vector<Hop>{};
  const int n = node_count();
  if (src < 0 || src >= n || dst < 0 || dst >= n) {
    throw InternalError("search endpoints outside roadmap");
  }
  std::vector<int> prev_node(n, -2);
  std::vector<int> prev_edge(n, -1);
  std::vector<char> bucket_done(bucket_members_.size(), 0);
  std::deque<int> queue{src};
  prev_node[src] = -1;
  bool found = false;
  while (!queue.empty() && !found) {
    const int u = queue.front();
    queue.pop_front();
    for (int e = adj_head_[u]; e >= 0; e = (edge_a_[e] == u ? edge_next_a_[e] : edge_next_b_[e])) {
      const int v = edge_a_[e] == u ? edge_b_[e] : edge_a_[e];
      if (prev_node[v] == -2) {
        prev_node[v] = u;
        prev_edge[v] = e;
        if (v == dst) {
          found = true;
          break;
        }
        queue.push_back(v);
      }
    }
    if (found) break;
    // First member of a bucket to pop expands the whole equivalence
    // clique; later members find their mates already labeled.
    const int b = node_bucket_[u];
    if (!bucket_done[b]) {
      bucket_done[b] = 1;
      for (int w : bucket_members_[b]) {
        if (prev_node[w] == -2) {
          prev_node[w] = u;
          prev_edge[w] = -1;
          if (w == dst) {
            found = true;
            break;
          }
          queue.push_back(w);
        }
      }
    }
  }
  if (prev_node[dst] == -2) return std::nullopt;
  std::vector<Hop> hops;
  for (int v = dst; prev_node[v] != -1; v = prev_node[v]) {
    hops.push_back({v, prev_edge[v]});
  }
  std::reverse(hops.begin(), hops.end());
  return hops;
}

namespace {

void insert_connection(Roadmap& rm, const std::vector<graphgen::GeometricPebbleGraph>& graphs,
                       int graph_a, int graph_b, const congen::Connection& conn) {
  const std::size_t k = conn.per_color.size();
  std::vector<std::vector<int>> sel_a(k);
  std::vector<std::vector<int>> sel_b(k);
  for (std::size_t i = 0; i < k; ++i) {
    sel_a[i] = conn.per_color[i].from_vertices;
    sel_b[i] = conn.per_color[i].to_vertices;
    std::sort(sel_a[i].begin(), sel_a[i].end());
    std::sort(sel_b[i].begin(), sel_b[i].end());
  }
  const int na =
      rm.add_node(graph_a, sel_a, congen::signature_of_selection(graphs[graph_a], sel_a));
  const int nb =
      rm.add_node(graph_b, sel_b, congen::signature_of_selection(graphs[graph_b], sel_b));
  rm.add_connection_edge(na, nb, conn);
}

graphgen::GeometricPebbleGraph pseudo_graph(const Scenario& sc,
                                            const std::vector<std::vector<geom::Point>>& pts) {
  graphgen::GeometricPebbleGraph g;
  for (int i = 0; i < sc.color_count(); ++i) {
    const int m = sc.groups[i].robot_count();
    g.pumped.per_color.push_back({i, sc.groups[i].radius, m, pts[i]});
    g.graphs.emplace_back(m, std::vector<std::pair<int, int>>{});
  }
  return g;
}

void check_query_config(const Scenario& sc, const std::vector<std::vector<geom::Point>>& pts,
                        const char* what) {
  if (static_cast<int>(pts.size()) != sc.color_count()) {
    throw InvalidQueryError(std::string(what) + " configuration has wrong color count");
  }
  for (int i = 0; i < sc.color_count(); ++i) {
    if (static_cast<int>(pts[i].size()) != sc.groups[i].robot_count()) {
      throw InvalidQueryError(std::string(what) + " configuration has wrong robot count for color " +
                              std::to_string(i));
    }
    for (const auto& p : pts[i]) {
      if (!geom::is_finite(p)) {
        throw InvalidQueryError(std::string(what) + " configuration has non-finite coordinates");
      }
      if (!geom::disc_free(p, sc.groups[i].radius, sc.workspace)) {
        throw InvalidQueryError(std::string(what) + " configuration collides with the workspace");
      }
    }
  }
  for (int i = 0; i < sc.color_count(); ++i) {
    for (std::size_t a = 0; a < pts[i].size(); ++a) {
      for (int j = i; j < sc.color_count(); ++j) {
        for (std::size_t b = (i == j ? a + 1 : 0); b < pts[j].size(); ++b) {
          if (geom::distance(pts[i][a], pts[j][b]) < sc.groups[i].radius + sc.groups[j].radius) {
            throw InvalidQueryError(std::string(what) + " configuration has overlapping robots");
          }
        }
      }
    }
  }
}

std::vector<std::vector<int>> identity_selection(const Scenario& sc) {
  std::vector<std::vector<int>> sel(sc.color_count());
  for (int i = 0; i < sc.color_count(); ++i) {
    sel[i].resize(sc.groups[i].robot_count());
    for (int j = 0; j < sc.groups[i].robot_count(); ++j) sel[i][j] = j;
  }
  return sel;
}

}  // namespace

PlannerState preprocess(const Scenario& sc, const PlannerParams& params,
                        const Deadline& deadline) {
  validate_scenario(sc);
  if (params.g < 0) throw ValidationError("g_negative", "graph count must be >= 0");
  if (params.q < 1) throw ValidationError("q_not_positive", "connection budget must be >= 1");
  if (params.attempt_factor < 1) {
    throw ValidationError("attempt_factor_not_positive", "attempt factor must be >= 1");
  }
  if (params.max_tries < 1) {
    throw ValidationError("max_tries_not_positive", "sampling budget must be >= 1");
  }
  const int total = sc.total_robots();
  const int mu_eff = params.basic_mode ? total : params.mu;
  if (mu_eff < total) {
    throw ValidationError("mu_too_small", "point budget " + std::to_string(mu_eff) +
                                              " below robot count " + std::to_string(total));
  }

  PlannerState st;
  st.scenario = sc;
  st.params = params;
  std::vector<int> counts;
  for (const auto& g : sc.groups) counts.push_back(g.robot_count());
  st.roadmap.set_layout(counts);

  const auto specs = graphgen::color_specs(sc);
  const int threads = std::max(1, params.threads);
  SplitRng root(params.seed);

  std::vector<std::optional<graphgen::GeometricPebbleGraph>> sampled(
      static_cast<std::size_t>(params.g));
  std::vector<std::string> sample_errors(static_cast<std::size_t>(params.g));
  run_jobs(params.g, threads, deadline, "graph sampling", [&](int i) {
    SplitRng rng = root.stream("sample", static_cast<std::uint64_t>(i));
    try {
      auto pumped = graphgen::sample_pumped(specs, sc.workspace, mu_eff, rng, params.max_tries);
      sampled[i] = graphgen::build_pebble_graph(pumped, sc.workspace);
    } catch (const SamplingExhaustedError& e) {
      sample_errors[i] = e.what();
    }
  });
  for (int i = 0; i < params.g; ++i) {
    if (sampled[i]) {
      st.graphs.push_back(std::move(*sampled[i]));
    } else {
      ++st.failed_samples;
      st.warnings.push_back("graph sample " + std::to_string(i) +
                            " discarded: " + sample_errors[i]);
    }
  }
  if (params.g > 0 && st.graphs.empty()) {
    throw SamplingExhaustedError("all " + std::to_string(params.g) + " graph samples failed");
  }

  const int gc = static_cast<int>(st.graphs.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < gc; ++i) {
    for (int j = i + 1; j < gc; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::vector<congen::Connection>> conns(pairs.size());
  run_jobs(static_cast<int>(pairs.size()), threads, deadline, "pair connection", [&](int p) {
    SplitRng rng = root.stream("congen", static_cast<std::uint64_t>(p));
    conns[p] = congen::congen(st.graphs[pairs[p].first].pumped, st.graphs[pairs[p].second].pumped,
                              params.q, sc.workspace, rng, params.attempt_factor);
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    deadline.check("roadmap insertion");
    for (const auto& c : conns[p]) {
      insert_connection(st.roadmap, st.graphs, pairs[p].first, pairs[p].second, c);
    }
  }
  return st;
}

int connect(PlannerState& state, int graph_a, int graph_b, int q, SplitRng rng) {
  const auto conns =
      congen::congen(state.graphs[graph_a].pumped, state.graphs[graph_b].pumped, q,
                     state.scenario.workspace, rng, state.params.attempt_factor);
  for (const auto& c : conns) {
    insert_connection(state.roadmap, state.graphs, graph_a, graph_b, c);
  }
  return static_cast<int>(conns.size());
}

QueryResult query(const PlannerState& state,
                  const std::vector<std::vector<geom::Point>>& starts,
                  const std::vector<std::vector<geom::Point>>& targets, int q,
                  const Deadline& deadline) {
  check_query_config(state.scenario, starts, "start");
  check_query_config(state.scenario, targets, "target");
  if (q < 1) throw ValidationError("q_not_positive", "connection budget must be >= 1");

  std::vector<graphgen::GeometricPebbleGraph> all = state.graphs;
  const int sid = static_cast<int>(all.size());
  all.push_back(pseudo_graph(state.scenario, starts));
  const int tid = sid + 1;
  all.push_back(pseudo_graph(state.scenario, targets));

  Roadmap rm = state.roadmap;
  const auto ident = identity_selection(state.scenario);
  const int s_node = rm.add_node(sid, ident, congen::signature_of_selection(all[sid], ident));
  const int t_node = rm.add_node(tid, ident, congen::signature_of_selection(all[tid], ident));

  const int gc = static_cast<int>(state.graphs.size());
  struct Job {
    int a;
    int b;
    const char* label;
    std::uint64_t idx;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < gc; ++i) jobs.push_back({sid, i, "qsrc", static_cast<std::uint64_t>(i)});
  for (int i = 0; i < gc; ++i) jobs.push_back({i, tid, "qdst", static_cast<std::uint64_t>(i)});
  jobs.push_back({sid, tid, "qdirect", 0});

  SplitRng root(state.params.seed);
  const int threads = std::max(1, state.params.threads);
  std::vector<std::vector<congen::Connection>> conns(jobs.size());

  QueryResult res;
  try {
    run_jobs(static_cast<int>(jobs.size()), threads, deadline, "query connection", [&](int p) {
      SplitRng rng = root.stream(jobs[p].label, jobs[p].idx);
      conns[p] = congen::congen(all[jobs[p].a].pumped, all[jobs[p].b].pumped, q,
                                state.scenario.workspace, rng, state.params.attempt_factor);
    });
    for (std::size_t p = 0; p < jobs.size(); ++p) {
      deadline.check("query roadmap insertion");
      for (const auto& c : conns[p]) insert_connection(rm, all, jobs[p].a, jobs[p].b, c);
    }
    deadline.check("roadmap search");
    const auto hops = rm.shortest_path(s_node, t_node);
    res.roadmap_nodes = rm.node_count();
    res.connection_edges = rm.connection_edge_count();
    res.equivalence_edges = rm.equivalence_edge_count();
    if (!hops) {
      res.status = QueryStatus::Infeasible;
      return res;
    }
    res.plan = retrieve_path(all, rm, s_node, *hops);
    res.status = QueryStatus::Solved;
    return res;
  } catch (const TimedOutError&) {
    res.status = QueryStatus::TimedOut;
    res.roadmap_nodes = rm.node_count();
    res.connection_edges = rm.connection_edge_count();
    res.equivalence_edges = rm.equivalence_edge_count();
    return res;
  }
}

Plan retrieve_path(const std::vector<graphgen::GeometricPebbleGraph>& graphs,
                   const Roadmap& rm, int start_node,
                   const std::vector<Roadmap::Hop>& hops) {
  Plan plan;
  std::vector<std::vector<int>> binding = rm.node_selection(start_node);
  const int k = static_cast<int>(binding.size());
  int cur = start_node;
  for (const auto& hop : hops) {
    if (hop.edge >= 0) {
      const bool forward = rm.edge_node_a(hop.edge) == cur;
      if (!forward && rm.edge_node_b(hop.edge) != cur) {
        throw InternalError("hop edge is not incident to the current node");
      }
      const congen::Connection conn = rm.edge_connection(hop.edge);
      const auto& gfrom = graphs[rm.node_graph(cur)];
      const auto& gto = graphs[rm.node_graph(hop.node)];
      PlanStep step;
      step.kind = PlanStep::Kind::Simultaneous;
      for (int i = 0; i < k; ++i) {
        const auto& pc = conn.per_color[i];
        std::vector<std::pair<int, int>> next;
        for (std::size_t s = 0; s < pc.from_vertices.size(); ++s) {
          if (forward) {
            next.emplace_back(pc.from_vertices[s], pc.to_vertices[s]);
          } else {
            next.emplace_back(pc.to_vertices[s], pc.from_vertices[s]);
          }
        }
        for (std::size_t j = 0; j < binding[i].size(); ++j) {
          const auto itn =
              std::find_if(next.begin(), next.end(),
                           [&](const auto& pr) { return pr.first == binding[i][j]; });
          if (itn == next.end()) {
            throw InternalError("connection does not cover an occupied vertex");
          }
          const geom::Point from = gfrom.pumped.per_color[i].points[binding[i][j]];
          const geom::Point to = gto.pumped.per_color[i].points[itn->second];
          step.motions.push_back({RobotId{i, static_cast<int>(j)}, {from, to}});
          binding[i][j] = itn->second;
        }
      }
      plan.steps.push_back(std::move(step));
    } else {
      if (rm.node_graph(cur) != rm.node_graph(hop.node)) {
        throw InternalError("equivalence hop across different graphs");
      }
      const auto& g = graphs[rm.node_graph(cur)];
      const auto target_sel = rm.node_selection(hop.node);
      for (int i = 0; i < k; ++i) {
        const pebble::PebblePath pp =
            pebble::pebble_solve(g.graphs[i], binding[i], target_sel[i]);
        std::vector<RobotId> ids(binding[i].size());
        for (std::size_t j = 0; j < ids.size(); ++j) {
          ids[j] = RobotId{i, static_cast<int>(j)};
        }
        for (const auto& motion : transform_pebble_path(g, i, pp, ids)) {
          PlanStep step;
          step.kind = PlanStep::Kind::Single;
          step.motions.push_back(motion);
          plan.steps.push_back(std::move(step));
        }
        binding[i] = pp.final_placement();
      }
    }
    cur = hop.node;
  }
  return plan;
}

std::vector<RobotMotion> transform_pebble_path(const graphgen::GeometricPebbleGraph& g,
                                               int color, const pebble::PebblePath& path,
                                               const std::vector<RobotId>& binding) {
  if (binding.size() != path.start.size()) {
    throw SizeMismatchError("binding covers " + std::to_string(binding.size()) +
                            " pebbles, path has " + std::to_string(path.start.size()));
  }
  std::vector<RobotMotion> out;
  out.reserve(path.moves.size());
  for (const auto& mv : path.moves) {
    out.push_back({binding[mv.pebble], g.edge_motion(color, mv.from, mv.to)});
  }
  return out;
}

}  // namespace kcolor::roadmap
