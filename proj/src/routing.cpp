#include "netdesign/routing.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netdesign {

std::string routing_name(RoutingKind k) {
  switch (k) {
    case RoutingKind::SPR: return "spr";
    case RoutingKind::EFR: return "efr";
    case RoutingKind::ExplicitPathSet: return "pathset";
  }
  return "?";
}

RoutingKind routing_from_name(const std::string& name) {
  if (name == "spr") return RoutingKind::SPR;
  if (name == "efr") return RoutingKind::EFR;
  if (name == "pathset") return RoutingKind::ExplicitPathSet;
  throw std::invalid_argument("unknown routing: " + name);
}

// ---------------------------------------------------------------------------
// PathSet

PathSet::PathSet(int node_count) : n_(node_count), paths_(static_cast<size_t>(node_count) * node_count) {}

void PathSet::set_path(int u, int v, std::vector<int> p) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("PathSet::set_path: bad pair");
  if (p.size() < 2 || p.front() != u || p.back() != v)
    throw std::invalid_argument("PathSet::set_path: path does not span the pair");
  std::set<int> seen(p.begin(), p.end());
  if (seen.size() != p.size()) throw std::invalid_argument("PathSet::set_path: path not simple");
  paths_[u * n_ + v] = std::move(p);
}

bool PathSet::complete() const {
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (u != v && paths_[u * n_ + v].empty()) return false;
  return true;
}

std::vector<int> PathSet::occurrences(const Network& net) const {
  std::vector<int> occ(net.edge_count(), 0);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) {
      if (u == v) continue;
      const auto& p = paths_[u * n_ + v];
      for (size_t i = 0; i + 1 < p.size(); ++i) {
        int id = -1;
        for (auto [w, eid] : net.adjacency(p[i]))
          if (w == p[i + 1]) {
            id = eid;
            break;
          }
        if (id < 0) throw std::invalid_argument("PathSet: path uses a non-edge");
        ++occ[id];
      }
    }
  return occ;
}

int PathSet::max_occurrence(const Network& net) const {
  auto occ = occurrences(net);
  return occ.empty() ? 0 : *std::max_element(occ.begin(), occ.end());
}

void PathSet::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) {
      if (u == v || paths_[u * n_ + v].empty()) continue;
      out << u << " " << v << " :";
      for (int x : paths_[u * n_ + v]) out << " " << x;
      out << "\n";
    }
}

PathSet PathSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::tuple<int, int, std::vector<int>>> rows;
  int max_node = -1;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    int u, v;
    std::string colon;
    if (!(ss >> u >> v >> colon) || colon != ":") continue;
    std::vector<int> p;
    int x;
    while (ss >> x) {
      p.push_back(x);
      max_node = std::max(max_node, x);
    }
    max_node = std::max({max_node, u, v});
    rows.emplace_back(u, v, std::move(p));
  }
  PathSet ps(max_node + 1);
  for (auto& [u, v, p] : rows) ps.set_path(u, v, std::move(p));
  return ps;
}

// ---------------------------------------------------------------------------
// RoutingModel

RoutingModel::RoutingModel(RoutingKind kind, const Network& net) : kind_(kind), net_(net) {}

std::int64_t RoutingModel::hop_weight(int from) const {
  return kind_ == RoutingKind::EFR ? net_.degree(from) : 1;
}

RoutingModel RoutingModel::build_spr(const Network& net) {
  RoutingModel m(RoutingKind::SPR, net);
  const int n = net.node_count();
  m.cost_to_.assign(n, {});
  m.sigma_to_.assign(n, {});
#pragma omp parallel for schedule(static)
  for (int t = 0; t < n; ++t) {
    std::vector<std::int64_t> dist(n, -1);
    std::vector<double> sigma(n, 0.0);
    std::vector<int> frontier{t}, next;
    dist[t] = 0;
    sigma[t] = 1.0;
    while (!frontier.empty()) {
      next.clear();
      for (int u : frontier)
        for (auto [v, id] : net.adjacency(u)) {
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            next.push_back(v);
          }
          if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
        }
      frontier.swap(next);
    }
    m.cost_to_[t] = std::move(dist);
    m.sigma_to_[t] = std::move(sigma);
  }
  return m;
}

RoutingModel RoutingModel::build_efr(const Network& net) {
  RoutingModel m(RoutingKind::EFR, net);
  const int n = net.node_count();
  m.cost_to_.assign(n, {});
  m.sigma_to_.assign(n, {});
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
#pragma omp parallel for schedule(static)
  for (int t = 0; t < n; ++t) {
    std::vector<std::int64_t> cost(n, kInf);
    std::vector<double> sigma(n, 0.0);
    std::vector<char> settled(n, 0);
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    cost[t] = 0;
    sigma[t] = 1.0;
    pq.push({0, t});
    while (!pq.empty()) {
      auto [c, y] = pq.top();
      pq.pop();
      if (settled[y] || c != cost[y]) continue;
      settled[y] = 1;
      for (auto [u, id] : net.adjacency(y)) {
        // forward step u -> y costs u's degree
        std::int64_t cand = cost[y] + net.degree(u);
        if (cand < cost[u]) {
          cost[u] = cand;
          sigma[u] = sigma[y];
          pq.push({cand, u});
        } else if (cand == cost[u]) {
          sigma[u] += sigma[y];
        }
      }
    }
    m.cost_to_[t] = std::move(cost);
    m.sigma_to_[t] = std::move(sigma);
  }
  return m;
}

RoutingModel RoutingModel::from_path_set(const Network& net, PathSet paths) {
  if (paths.node_count() != net.node_count())
    throw std::invalid_argument("from_path_set: size mismatch");
  if (!paths.complete()) throw std::invalid_argument("from_path_set: path set incomplete");
  paths.occurrences(net);  // validates every stored path against the network
  RoutingModel m(RoutingKind::ExplicitPathSet, net);
  const int n = net.node_count();
  m.pathset_paths_.resize(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) m.pathset_paths_[u * n + v] = paths.path(u, v);
  return m;
}

double RoutingModel::candidate_count(int u, int v) const {
  if (u == v) return 0.0;
  if (kind_ == RoutingKind::ExplicitPathSet) return 1.0;
  return sigma_to_[v][u];
}

std::int64_t RoutingModel::cost(int u, int v) const {
  if (u == v) return 0;
  if (kind_ == RoutingKind::ExplicitPathSet)
    return static_cast<std::int64_t>(pathset_paths_[u * net_.node_count() + v].size()) - 1;
  return cost_to_[v][u];
}

const std::vector<int>& RoutingModel::stored_path(int u, int v) const {
  if (kind_ != RoutingKind::ExplicitPathSet)
    throw std::logic_error("stored_path: not a path-set model");
  if (u == v || u < 0 || v < 0 || u >= net_.node_count() || v >= net_.node_count())
    throw std::invalid_argument("stored_path: bad pair");
  return pathset_paths_[u * net_.node_count() + v];
}

int RoutingModel::next_hop(int current, int dst, Rng& rng) const {
  const int n = net_.node_count();
  if (current < 0 || dst < 0 || current >= n || dst >= n || current == dst)
    throw std::invalid_argument("next_hop: bad node pair");
  if (kind_ == RoutingKind::ExplicitPathSet) return pathset_paths_[current * n + dst][1];

  const auto& cost = cost_to_[dst];
  const auto& sigma = sigma_to_[dst];
  const std::int64_t w = hop_weight(current);
  double r = rand_unit(rng) * sigma[current];
  int fallback = -1;
  for (auto [y, id] : net_.adjacency(current)) {
    if (cost[current] != w + cost[y]) continue;
    fallback = y;
    r -= sigma[y];
    if (r < 0) return y;
  }
  if (fallback < 0) throw std::logic_error("next_hop: no candidate neighbor");
  return fallback;  // guard against accumulated rounding in the roulette
}

// ---------------------------------------------------------------------------
// Path pools

namespace {

// depth-first enumeration of candidate paths u -> t over a model DAG,
// neighbors in ascending id order, stopping at `cap` paths
void enumerate_candidates(const Network& net, const RoutingModel& model, int u, int t, int cap,
                          std::vector<std::vector<int>>& out) {
  std::vector<int> cur{u};
  struct Frame {
    int node;
    std::vector<int> nexts;
    size_t idx;
  };
  auto eligible_nexts = [&](int x) {
    std::vector<int> ys;
    for (auto [y, id] : net.adjacency(x))
      if (model.cost(x, t) == model.hop_weight(x) + model.cost(y, t)) ys.push_back(y);
    std::sort(ys.begin(), ys.end());
    return ys;
  };
  std::vector<Frame> stack{{u, eligible_nexts(u), 0}};
  while (!stack.empty() && static_cast<int>(out.size()) < cap) {
    Frame& f = stack.back();
    if (f.idx >= f.nexts.size()) {
      stack.pop_back();
      cur.pop_back();
      continue;
    }
    int y = f.nexts[f.idx++];
    cur.push_back(y);
    if (y == t) {
      out.push_back(cur);
      cur.pop_back();
    } else {
      stack.push_back({y, eligible_nexts(y), 0});
    }
  }
}

// shortest path by hops avoiding banned nodes/edges; lexicographic parents.
// banned_edges holds directed (from,to) pairs.
std::vector<int> restricted_shortest(const Network& net, int src, int dst,
                                     const std::vector<char>& banned_node,
                                     const std::set<std::pair<int, int>>& banned_edge) {
  const int n = net.node_count();
  std::vector<int> dist(n, -1), parent(n, -1);
  std::vector<int> frontier, next;
  if (banned_node[src]) return {};
  dist[src] = 0;
  frontier.push_back(src);
  while (!frontier.empty() && dist[dst] < 0) {
    next.clear();
    std::sort(frontier.begin(), frontier.end());
    for (int u : frontier)
      for (auto [v, id] : net.adjacency(u)) {
        if (banned_node[v] || dist[v] >= 0) continue;
        if (banned_edge.count({u, v})) continue;
        dist[v] = dist[u] + 1;
        parent[v] = u;
        next.push_back(v);
      }
    frontier.swap(next);
  }
  if (dist[dst] < 0) return {};
  std::vector<int> path;
  for (int x = dst; x >= 0; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<std::vector<int>> k_shortest_paths(const Network& net, int src, int dst, int k) {
  std::vector<std::vector<int>> result;
  if (k <= 0) return result;
  const int n = net.node_count();
  std::vector<char> no_ban(n, 0);
  std::set<std::pair<int, int>> no_edge_ban;
  auto first = restricted_shortest(net, src, dst, no_ban, no_edge_ban);
  if (first.empty()) return result;
  result.push_back(first);
  // candidates ordered by (length, lexicographic)
  std::set<std::pair<size_t, std::vector<int>>> candidates;
  std::set<std::vector<int>> seen{first};
  while (static_cast<int>(result.size()) < k) {
    const auto& prev = result.back();
    for (size_t i = 0; i + 1 < prev.size(); ++i) {
      std::vector<int> root(prev.begin(), prev.begin() + i + 1);
      std::vector<char> banned_node(n, 0);
      for (size_t j = 0; j < i; ++j) banned_node[prev[j]] = 1;
      std::set<std::pair<int, int>> banned_edge;
      for (const auto& p : result)
        if (p.size() > i && std::equal(root.begin(), root.end(), p.begin()))
          banned_edge.insert({p[i], p[i + 1]});
      auto spur = restricted_shortest(net, prev[i], dst, banned_node, banned_edge);
      if (spur.empty()) continue;
      std::vector<int> total = root;
      total.insert(total.end(), spur.begin() + 1, spur.end());
      if (seen.insert(total).second) candidates.insert({total.size(), total});
    }
    if (candidates.empty()) break;
    result.push_back(candidates.begin()->second);
    candidates.erase(candidates.begin());
  }
  return result;
}

PathPool build_pool(const Network& net, const PoolConfig& cfg) {
  const int n = net.node_count();
  PathPool pool;
  pool.n = n;
  pool.candidates.resize(static_cast<size_t>(n) * n);
  RoutingModel spr = RoutingModel::build_spr(net);
  RoutingModel efr = RoutingModel::build_efr(net);
  const bool use_yen = cfg.yen_k > 0 && n <= cfg.yen_max_n;
#pragma omp parallel for schedule(dynamic, 4)
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      std::set<std::vector<int>> uniq;
      std::vector<std::vector<int>> cands;
      enumerate_candidates(net, spr, u, v, cfg.max_spr_per_pair, cands);
      enumerate_candidates(net, efr, u, v, cfg.max_efr_per_pair, cands);
      if (use_yen)
        for (auto& p : k_shortest_paths(net, u, v, cfg.yen_k)) cands.push_back(std::move(p));
      auto& slot = pool.candidates[u * n + v];
      for (auto& p : cands)
        if (uniq.insert(p).second) slot.push_back(std::move(p));
    }
  }
  return pool;
}

PathPool exhaustive_pool(const Network& net) {
  const int n = net.node_count();
  if (n > 10) throw std::invalid_argument("exhaustive_pool: refused above 10 nodes");
  PathPool pool;
  pool.n = n;
  pool.candidates.resize(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    std::vector<char> visited(n, 0);
    std::vector<int> cur{u};
    visited[u] = 1;
    // iterative DFS over all simple paths from u
    struct Frame {
      size_t idx = 0;
    };
    std::vector<Frame> stack{{}};
    while (!stack.empty()) {
      int x = cur.back();
      Frame& f = stack.back();
      if (f.idx >= net.adjacency(x).size()) {
        visited[x] = 0;
        cur.pop_back();
        stack.pop_back();
        continue;
      }
      auto [y, id] = net.adjacency(x)[f.idx++];
      if (visited[y]) continue;
      cur.push_back(y);
      visited[y] = 1;
      pool.candidates[u * n + y].push_back(cur);
      stack.push_back({});
    }
  }
  return pool;
}

PathSet spr_path_set(const Network& net) {
  const int n = net.node_count();
  RoutingModel spr = RoutingModel::build_spr(net);
  PathSet ps(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      std::vector<int> p{u};
      int x = u;
      while (x != v) {
        int best = -1;
        for (auto [y, id] : net.adjacency(x))
          if (spr.cost(x, v) == 1 + spr.cost(y, v) && (best < 0 || y < best)) best = y;
        p.push_back(best);
        x = best;
      }
      ps.set_path(u, v, std::move(p));
    }
  return ps;
}

// ---------------------------------------------------------------------------
// Greedy min-max

namespace {

std::vector<int> path_edge_ids(const Network& net, const std::vector<int>& p) {
  std::vector<int> ids;
  ids.reserve(p.size() - 1);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    int id = -1;
    for (auto [w, eid] : net.adjacency(p[i]))
      if (w == p[i + 1]) {
        id = eid;
        break;
      }
    if (id < 0) throw std::invalid_argument("greedy_minmax: pool path uses a non-edge");
    ids.push_back(id);
  }
  return ids;
}

struct OccState {
  std::vector<int> occ;
  std::vector<long long> hist;  // count of edges per occupancy value
  int max_val = 0;

  void init(const std::vector<int>& occurrences) {
    occ = occurrences;
    max_val = occ.empty() ? 0 : *std::max_element(occ.begin(), occ.end());
    hist.assign(max_val + 2, 0);
    for (int o : occ) ++hist[o];
  }
  void bump(int e, int delta) {
    --hist[occ[e]];
    occ[e] += delta;
    if (occ[e] >= static_cast<int>(hist.size())) hist.resize(occ[e] + 1, 0);
    ++hist[occ[e]];
    if (occ[e] > max_val) max_val = occ[e];
  }
  void settle_max() {
    while (max_val > 0 && hist[max_val] == 0) --max_val;
  }
  std::pair<int, long long> key() const { return {max_val, hist[max_val]}; }
};

}  // namespace

PathSet greedy_minmax(const Network& net, const PathPool& pool, PathSet init) {
  const int n = net.node_count();
  if (pool.n != n || init.node_count() != n)
    throw std::invalid_argument("greedy_minmax: size mismatch");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && pool.at(u, v).empty())
        throw std::invalid_argument("greedy_minmax: pool missing a pair");
  if (!init.complete()) throw std::invalid_argument("greedy_minmax: init incomplete");

  OccState state;
  state.init(init.occurrences(net));
  std::vector<std::vector<int>> cur_edges(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) cur_edges[u * n + v] = path_edge_ids(net, init.path(u, v));
  std::vector<std::vector<std::vector<int>>> pool_edges(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v)
        for (const auto& p : pool.at(u, v)) pool_edges[u * n + v].push_back(path_edge_ids(net, p));

  auto apply = [&](const std::vector<int>& remove, const std::vector<int>& add) {
    for (int e : remove) state.bump(e, -1);
    for (int e : add) state.bump(e, +1);
    state.settle_max();
  };

  bool changed = true;
  int guard = 100000;
  while (changed && guard-- > 0) {
    changed = false;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const size_t slot = static_cast<size_t>(u) * n + v;
        auto before = state.key();
        for (size_t c = 0; c < pool_edges[slot].size(); ++c) {
          const auto& cand = pool_edges[slot][c];
          if (cand == cur_edges[slot]) continue;
          apply(cur_edges[slot], cand);
          if (state.key() < before) {
            init.set_path(u, v, pool.at(u, v)[c]);
            cur_edges[slot] = cand;
            changed = true;
            break;
          }
          apply(cand, cur_edges[slot]);  // revert
        }
      }
  }
  return init;
}

}  // namespace netdesign
