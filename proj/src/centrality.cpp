#include "netdesign/centrality.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <stdexcept>

namespace netdesign {

namespace {

// workspace reused across the per-source passes of one thread
struct Workspace {
  std::vector<std::int64_t> cost;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<double> mean_len;                     // expected candidate-path hops s -> v
  std::vector<std::vector<std::pair<int, int>>> pred;  // (node, edge id)
  std::vector<int> order;                           // settle order
  std::vector<char> settled;

  explicit Workspace(int n) : cost(n), sigma(n), delta(n), mean_len(n), pred(n), settled(n) {
    order.reserve(n);
  }
};

// One Brandes pass from source s under hop costs (weighted == false) or EFR
// degree costs. Accumulates edge dependencies into acc and the pair-mean
// candidate length into len_sum.
void brandes_pass(const Network& net, int s, bool weighted, Workspace& ws,
                  std::vector<double>& acc, double& len_sum) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::fill(ws.cost.begin(), ws.cost.end(), kInf);
  std::fill(ws.sigma.begin(), ws.sigma.end(), 0.0);
  std::fill(ws.delta.begin(), ws.delta.end(), 0.0);
  std::fill(ws.mean_len.begin(), ws.mean_len.end(), 0.0);
  std::fill(ws.settled.begin(), ws.settled.end(), 0);
  for (auto& p : ws.pred) p.clear();
  ws.order.clear();

  ws.cost[s] = 0;
  ws.sigma[s] = 1.0;
  if (!weighted) {
    // BFS layers
    std::vector<int> frontier{s}, next;
    while (!frontier.empty()) {
      next.clear();
      for (int u : frontier) {
        ws.order.push_back(u);
        for (auto [v, id] : net.adjacency(u)) {
          if (ws.cost[v] == kInf) {
            ws.cost[v] = ws.cost[u] + 1;
            next.push_back(v);
          }
          if (ws.cost[v] == ws.cost[u] + 1) {
            ws.sigma[v] += ws.sigma[u];
            ws.pred[v].push_back({u, id});
          }
        }
      }
      frontier.swap(next);
    }
  } else {
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [c, u] = pq.top();
      pq.pop();
      if (ws.settled[u] || c != ws.cost[u]) continue;
      ws.settled[u] = 1;
      ws.order.push_back(u);
      const std::int64_t w = net.degree(u);  // cost of leaving u
      for (auto [v, id] : net.adjacency(u)) {
        std::int64_t cand = ws.cost[u] + w;
        if (cand < ws.cost[v]) {
          ws.cost[v] = cand;
          ws.sigma[v] = ws.sigma[u];
          ws.pred[v].assign(1, {u, id});
          pq.push({cand, v});
        } else if (cand == ws.cost[v]) {
          ws.sigma[v] += ws.sigma[u];
          ws.pred[v].push_back({u, id});
        }
      }
    }
  }

  // expected hops of a uniformly chosen candidate path, in settle order
  for (int v : ws.order) {
    if (v == s) continue;
    double m = 0.0;
    for (auto [u, id] : ws.pred[v]) m += (ws.sigma[u] / ws.sigma[v]) * (ws.mean_len[u] + 1.0);
    ws.mean_len[v] = m;
    len_sum += m;
  }

  // dependency accumulation, reverse settle order
  for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
    int v = *it;
    for (auto [u, id] : ws.pred[v]) {
      double c = (ws.sigma[u] / ws.sigma[v]) * (1.0 + ws.delta[v]);
      acc[id] += c;
      ws.delta[u] += c;
    }
  }
}

EdgeCentrality run(const Network& net, bool weighted, bool parallel, RoutingKind tag) {
  const int n = net.node_count();
  const int m = net.edge_count();
  EdgeCentrality out;
  out.routing = tag;
  out.value.assign(m, 0.0);
  double len_total = 0.0;

  if (!parallel) {
    Workspace ws(n);
    for (int s = 0; s < n; ++s) brandes_pass(net, s, weighted, ws, out.value, len_total);
  } else {
    const int max_threads = omp_get_max_threads();
    std::vector<std::vector<double>> acc(max_threads);
    std::vector<double> len(max_threads, 0.0);
#pragma omp parallel
    {
      const int tid = omp_get_thread_num();
      acc[tid].assign(m, 0.0);
      Workspace ws(n);
#pragma omp for schedule(static)
      for (int s = 0; s < n; ++s) brandes_pass(net, s, weighted, ws, acc[tid], len[tid]);
    }
    // reduce in thread order so repeat runs sum identically
    for (int t = 0; t < max_threads; ++t) {
      if (acc[t].empty()) continue;
      for (int e = 0; e < m; ++e) out.value[e] += acc[t][e];
      len_total += len[t];
    }
  }

  out.b_max = *std::max_element(out.value.begin(), out.value.end());
  out.mean_candidate_length = len_total / (static_cast<double>(n) * (n - 1));
  return out;
}

}  // namespace

EdgeCentrality edge_betweenness(const Network& net) {
  return run(net, false, true, RoutingKind::SPR);
}

EdgeCentrality edge_betweenness_serial(const Network& net) {
  return run(net, false, false, RoutingKind::SPR);
}

EdgeCentrality effective_betweenness(const Network& net, RoutingKind kind) {
  if (kind == RoutingKind::ExplicitPathSet)
    throw std::invalid_argument("effective_betweenness: a path set is required for this kind");
  return run(net, kind == RoutingKind::EFR, true, kind);
}

EdgeCentrality effective_betweenness_serial(const Network& net, RoutingKind kind) {
  if (kind == RoutingKind::ExplicitPathSet)
    throw std::invalid_argument("effective_betweenness: a path set is required for this kind");
  return run(net, kind == RoutingKind::EFR, false, kind);
}

EdgeCentrality effective_betweenness(const Network& net, const RoutingModel& model) {
  if (model.network().node_count() != net.node_count() ||
      model.network().edge_count() != net.edge_count())
    throw std::invalid_argument("effective_betweenness: model built on a different network");
  if (model.kind() != RoutingKind::ExplicitPathSet)
    return effective_betweenness(net, model.kind());

  // one stored path per pair: the fraction through an edge is 0 or 1
  const int n = net.node_count();
  EdgeCentrality out;
  out.routing = RoutingKind::ExplicitPathSet;
  out.value.assign(net.edge_count(), 0.0);
  long long hops = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const auto& p = model.stored_path(u, v);
      for (size_t i = 0; i + 1 < p.size(); ++i) {
        for (auto [w, id] : net.adjacency(p[i]))
          if (w == p[i + 1]) {
            out.value[id] += 1.0;
            break;
          }
        ++hops;
      }
    }
  out.b_max = *std::max_element(out.value.begin(), out.value.end());
  out.mean_candidate_length = static_cast<double>(hops) / (static_cast<double>(n) * (n - 1));
  return out;
}

void write_centrality_csv(const Network& net, const EdgeCentrality& ec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "edge_id,u,v,betweenness\n";
  for (int e = 0; e < net.edge_count(); ++e)
    out << e << "," << net.edge(e).u << "," << net.edge(e).v << "," << ec.value[e] << "\n";
}

}  // namespace netdesign
