#include "netdesign/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "netdesign/rng.hpp"

namespace netdesign {

std::string family_name(Family f) {
  switch (f) {
    case Family::BA: return "ba";
    case Family::PA: return "pa";
    case Family::HOT: return "hot";
    case Family::ER: return "er";
    case Family::WS: return "ws";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "ba") return Family::BA;
  if (name == "pa") return Family::PA;
  if (name == "hot") return Family::HOT;
  if (name == "er") return Family::ER;
  if (name == "ws") return Family::WS;
  throw std::invalid_argument("unknown topology family: " + name);
}

namespace {

// adjacency-set scaffold used while a graph is under construction
struct Builder {
  int n;
  std::vector<Edge> edges;
  std::vector<std::set<int>> adj;

  explicit Builder(int n_) : n(n_), adj(n_) {}

  bool adjacent(int a, int b) const { return adj[a].count(b) > 0; }

  void add(int a, int b) {
    edges.push_back({a, b});
    adj[a].insert(b);
    adj[b].insert(a);
  }

  void remove(int a, int b) {
    adj[a].erase(b);
    adj[b].erase(a);
    for (size_t i = 0; i < edges.size(); ++i) {
      if ((edges[i].u == a && edges[i].v == b) || (edges[i].u == b && edges[i].v == a)) {
        edges[i] = edges.back();
        edges.pop_back();
        return;
      }
    }
  }

  bool connected() const {
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (!vis[v]) {
          vis[v] = 1;
          ++count;
          q.push(v);
        }
    }
    return count == n;
  }

  std::vector<int> component_labels() const {
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      std::queue<int> q;
      q.push(s);
      comp[s] = c;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
          if (comp[v] < 0) {
            comp[v] = c;
            q.push(v);
          }
      }
      ++c;
    }
    return comp;
  }
};

}  // namespace

Network gen_ba(int n, int m, std::uint64_t seed) {
  if (m < 1 || n <= m) throw std::invalid_argument("gen_ba: need n > m >= 1");
  Rng rng(seed);
  Builder b(n);
  std::vector<int> stubs;  // node id repeated once per incident edge
  const int clique = m + 1;
  for (int i = 0; i < clique; ++i)
    for (int j = i + 1; j < clique; ++j) {
      b.add(i, j);
      stubs.push_back(i);
      stubs.push_back(j);
    }
  for (int i = clique; i < n; ++i) {
    std::set<int> targets;
    while (static_cast<int>(targets.size()) < m)
      targets.insert(stubs[rand_below(rng, stubs.size())]);
    for (int t : targets) {
      b.add(i, t);
      stubs.push_back(i);
      stubs.push_back(t);
    }
  }
  return Network(n, std::move(b.edges));
}

namespace {

// iterative Tarjan lowlink pass; returns per-edge bridge flags
std::vector<char> find_bridges(const Builder& b) {
  const int n = b.n;
  // local indexed adjacency with edge ids
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int id = 0; id < static_cast<int>(b.edges.size()); ++id) {
    adj[b.edges[id].u].push_back({b.edges[id].v, id});
    adj[b.edges[id].v].push_back({b.edges[id].u, id});
  }
  std::vector<char> bridge(b.edges.size(), 0);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int u, parent_edge;
    size_t next_child;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_child < adj[f.u].size()) {
        auto [v, id] = adj[f.u][f.next_child++];
        if (id == f.parent_edge) continue;
        if (disc[v] < 0) {
          disc[v] = low[v] = timer++;
          stack.push_back({v, id, 0});
        } else {
          low[f.u] = std::min(low[f.u], disc[v]);
        }
      } else {
        int u = f.u, pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().u;
          low[p] = std::min(low[p], low[u]);
          if (low[u] > disc[p]) bridge[pe] = 1;
        }
      }
    }
  }
  return bridge;
}

void sample_gnp(int n, double p, Rng& rng, Builder& b) {
  b.edges.clear();
  for (auto& s : b.adj) s.clear();
  if (p >= 1.0) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) b.add(i, j);
    return;
  }
  // geometric skips over the linearized i<j pair index
  const double log1mp = std::log1p(-p);
  std::vector<long long> row_start(n, 0);  // row i covers pairs (i, i+1..n-1)
  for (int i = 1; i < n; ++i) row_start[i] = row_start[i - 1] + (n - i);
  const long long total = row_start[n - 1];  // == C(n,2)
  long long k = -1;
  while (true) {
    double u = rand_unit(rng);
    long long skip = static_cast<long long>(std::floor(std::log1p(-u) / log1mp));
    k += 1 + skip;
    if (k >= total) break;
    int i = static_cast<int>(std::upper_bound(row_start.begin(), row_start.end(), k) -
                             row_start.begin()) -
            1;
    int j = i + 1 + static_cast<int>(k - row_start[i]);
    b.add(i, j);
  }
}

}  // namespace

Network gen_er(int n, int m_target, std::uint64_t seed, int max_attempts) {
  if (m_target < n - 1) throw std::invalid_argument("gen_er: m_target below tree bound");
  const double total_pairs = static_cast<double>(n) * (n - 1) / 2.0;
  const double p = std::min(1.0, m_target / total_pairs);
  Rng rng(seed);
  Builder b(n);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    sample_gnp(n, p, rng, b);
    if (b.connected()) return Network(n, std::move(b.edges));
  }
  // At this edge density large graphs are essentially never connected, so the
  // last sample is repaired: move a non-bridge edge from the largest component
  // to span two components. Keeps the drawn edge count.
  int guard = 4 * n;
  while (!b.connected()) {
    if (--guard < 0) throw std::runtime_error("gen_er: repair did not converge");
    auto comp = b.component_labels();
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> size(ncomp, 0);
    for (int c : comp) ++size[c];
    int giant = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());

    auto bridge = find_bridges(b);
    std::vector<int> movable;
    for (int id = 0; id < static_cast<int>(b.edges.size()); ++id)
      if (!bridge[id] && comp[b.edges[id].u] == giant) movable.push_back(id);

    std::vector<int> giant_nodes, other_nodes;
    for (int v = 0; v < n; ++v)
      (comp[v] == giant ? giant_nodes : other_nodes).push_back(v);

    int x = giant_nodes[rand_below(rng, giant_nodes.size())];
    int y = other_nodes[rand_below(rng, other_nodes.size())];
    if (movable.empty()) {
      b.add(x, y);  // giant is a tree; nothing to move
      continue;
    }
    int id = movable[rand_below(rng, movable.size())];
    b.remove(b.edges[id].u, b.edges[id].v);
    b.add(x, y);
  }
  return Network(n, std::move(b.edges));
}

Network gen_ws(int n, int k, double rewire_frac, std::uint64_t seed) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("gen_ws: k must be even and >= 2");
  if (n <= k) throw std::invalid_argument("gen_ws: need n > k");
  if (rewire_frac < 0.0 || rewire_frac > 1.0)
    throw std::invalid_argument("gen_ws: rewire_frac outside [0,1]");
  Rng rng(seed);
  Builder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= k / 2; ++j) b.add(i, (i + j) % n);
  const int m = n * k / 2;
  const int rewires = static_cast<int>(std::lround(rewire_frac * m));

  // pick distinct edges to rewire; snapshot endpoints, the edge vector
  // reshuffles on removal
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < rewires; ++i) {
    int j = i + static_cast<int>(rand_below(rng, m - i));
    std::swap(order[i], order[j]);
  }
  std::vector<Edge> chosen;
  chosen.reserve(rewires);
  for (int i = 0; i < rewires; ++i) chosen.push_back(b.edges[order[i]]);
  for (const Edge& e : chosen) {
    int home = e.u, old = e.v;
    bool done = false;
    for (int tries = 0; tries < 2000 && !done; ++tries) {
      int w = static_cast<int>(rand_below(rng, n));
      if (w == home || w == old || b.adjacent(home, w)) continue;
      b.remove(home, old);
      b.add(home, w);
      if (b.connected()) {
        done = true;
      } else {
        b.remove(home, w);
        b.add(home, old);
      }
    }
    if (!done) throw std::runtime_error("gen_ws: could not place a rewire");
  }
  return Network(n, std::move(b.edges));
}

Network gen_pa(int n, std::uint64_t seed) {
  if (n <= 3) throw std::invalid_argument("gen_pa: need n > 3");
  Rng rng(seed);
  Builder b(n);
  std::vector<int> stubs;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      b.add(i, j);
      stubs.push_back(i);
      stubs.push_back(j);
    }
  for (int i = 3; i < n; ++i) {
    int t = stubs[rand_below(rng, stubs.size())];
    b.add(i, t);
    stubs.push_back(i);
    stubs.push_back(t);
  }
  // internal edges, both endpoints preferential
  const long long cap = static_cast<long long>(n) * (n - 1) / 2;
  const long long m_target = std::min<long long>(2LL * n, cap);
  int stale = 0;
  while (static_cast<long long>(b.edges.size()) < m_target) {
    int a = stubs[rand_below(rng, stubs.size())];
    int c = stubs[rand_below(rng, stubs.size())];
    if (a == c || b.adjacent(a, c)) {
      if (++stale > 200000) throw std::runtime_error("gen_pa: internal fill stalled");
      continue;
    }
    stale = 0;
    b.add(a, c);
    stubs.push_back(a);
    stubs.push_back(c);
  }
  return Network(n, std::move(b.edges));
}

namespace {

// roulette over weights[idx] for idx in pool where eligible(idx); -1 if none
template <typename Eligible>
int weighted_pick(const std::vector<int>& pool, const std::vector<int>& weight, Rng& rng,
                  Eligible eligible) {
  long long total = 0;
  for (int idx : pool)
    if (eligible(idx)) total += weight[idx];
  if (total <= 0) return -1;
  long long r = static_cast<long long>(rand_below(rng, static_cast<std::uint64_t>(total)));
  for (int idx : pool) {
    if (!eligible(idx)) continue;
    r -= weight[idx];
    if (r < 0) return idx;
  }
  return -1;
}

}  // namespace

Network gen_hot(const Network& reference, std::uint64_t seed) {
  const int n = reference.node_count();
  Rng rng(seed);

  // output node i carries the i-th largest reference degree
  std::vector<int> want(n);
  for (int v = 0; v < n; ++v) want[v] = reference.degree(v);
  std::sort(want.begin(), want.end(), std::greater<int>());

  const int n_gw = std::max(1, static_cast<int>(std::lround(0.10 * n)));
  const int n_core = std::max(3, static_cast<int>(std::lround(0.01 * n)));

  // core: lowest-degree nodes with degree >= 3, outside the gateway decile
  std::vector<int> core;
  for (int v = n - 1; v >= n_gw && static_cast<int>(core.size()) < n_core; --v)
    if (want[v] >= 3) core.push_back(v);
  if (static_cast<int>(core.size()) < n_core) {
    std::ostringstream msg;
    msg << "gen_hot: degree sequence offers only " << core.size() << " core candidates (degree >= 3), need " << n_core;
    throw std::runtime_error(msg.str());
  }
  std::vector<char> is_core(n, 0);
  for (int v : core) is_core[v] = 1;

  Builder b(n);
  std::vector<int> stubs = want;
  std::vector<char> attached(n, 0);
  auto take = [&](int a, int c) {
    b.add(a, c);
    --stubs[a];
    --stubs[c];
    attached[a] = attached[c] = 1;
  };

  // core ring
  for (int j = 0; j < n_core; ++j) take(core[j], core[(j + 1) % n_core]);

  // gateway uplinks: one core stub per gateway while the core has spares
  std::vector<int> gateways(n_gw);
  std::iota(gateways.begin(), gateways.end(), 0);
  {
    int j = 0;
    for (int gw : gateways) {
      int scanned = 0;
      while (scanned < n_core && stubs[core[j]] == 0) {
        j = (j + 1) % n_core;
        ++scanned;
      }
      if (scanned == n_core || stubs[gw] == 0) break;
      take(core[j], gw);
      j = (j + 1) % n_core;
    }
  }

  // gateway mesh quotas; every gateway first anchors to an attached gateway
  const double mesh_frac = 0.35;
  std::vector<int> quota(n, 0);
  for (int gw : gateways)
    quota[gw] = std::min(stubs[gw], std::max(1, static_cast<int>(std::lround(mesh_frac * want[gw]))));
  for (int gw : gateways) {
    if (attached[gw]) continue;
    int anchor = weighted_pick(gateways, quota, rng, [&](int x) {
      return x != gw && attached[x] && quota[x] > 0 && stubs[x] > 0 && !b.adjacent(gw, x);
    });
    if (anchor < 0)
      anchor = weighted_pick(core, stubs, rng, [&](int x) { return stubs[x] > 0; });
    if (anchor < 0) throw std::runtime_error("gen_hot: cannot anchor gateway");
    take(gw, anchor);
    --quota[gw];
    if (quota[anchor] > 0) --quota[anchor];
  }
  // densify the mesh until quotas or partners run out
  for (int guard = 8 * n; guard > 0; --guard) {
    int a = weighted_pick(gateways, quota, rng, [&](int x) { return quota[x] > 0 && stubs[x] > 0; });
    if (a < 0) break;
    int c = weighted_pick(gateways, quota, rng,
                          [&](int x) { return x != a && quota[x] > 0 && stubs[x] > 0 && !b.adjacent(a, x); });
    if (c < 0) break;
    take(a, c);
    --quota[a];
    --quota[c];
  }

  // periphery, descending degree; every stub prefers gateway residuals
  std::vector<int> all_nodes(n);
  std::iota(all_nodes.begin(), all_nodes.end(), 0);
  for (int v = n_gw; v < n; ++v) {
    if (is_core[v]) continue;
    while (stubs[v] > 0) {
      int gw = weighted_pick(gateways, stubs, rng,
                             [&](int x) { return stubs[x] > 0 && x != v && !b.adjacent(v, x); });
      if (gw >= 0) {
        take(v, gw);
        continue;
      }
      int host = weighted_pick(all_nodes, stubs, rng, [&](int x) {
        return x != v && attached[x] && stubs[x] > 0 && !b.adjacent(v, x);
      });
      if (host < 0) break;  // resolved below
      take(v, host);
    }
  }

  // leftover stubs: pair up, then fall back to double-edge swaps
  for (int guard = 8 * n; guard > 0; --guard) {
    std::vector<int> open;
    for (int v = 0; v < n; ++v)
      if (stubs[v] > 0) open.push_back(v);
    if (open.empty()) break;
    bool paired = false;
    for (size_t i = 0; i < open.size() && !paired; ++i)
      for (size_t j = i + 1; j < open.size() && !paired; ++j)
        if (!b.adjacent(open[i], open[j])) {
          take(open[i], open[j]);
          paired = true;
        }
    if (paired) continue;
    // swap: remove (a,c) disjoint from u's neighborhood, wire u into both
    int u = open[0];
    bool swapped = false;
    for (int tries = 0; tries < 5000 && !swapped; ++tries) {
      const Edge& e = b.edges[rand_below(rng, b.edges.size())];
      int a = e.u, c = e.v;
      if (a == u || c == u || b.adjacent(u, a) || b.adjacent(u, c)) continue;
      if (stubs[u] >= 2) {
        b.remove(a, c);
        take(u, a);
        take(u, c);
        stubs[a]++;  // take() decremented the swap partners; restore
        stubs[c]++;
        swapped = true;
      } else if (open.size() >= 2) {
        int v = open[1];
        if (a == v || c == v || b.adjacent(v, c)) continue;
        b.remove(a, c);
        take(u, a);
        take(v, c);
        stubs[a]++;
        stubs[c]++;
        swapped = true;
      }
    }
    if (!swapped) throw std::runtime_error("gen_hot: could not resolve leftover stubs");
  }

  for (int v = 0; v < n; ++v)
    if (stubs[v] != 0) throw std::runtime_error("gen_hot: degree sequence not met");
  return Network(n, std::move(b.edges));
}

Network generate(const TopologySpec& spec) {
  switch (spec.family) {
    case Family::BA:
      return gen_ba(spec.n, spec.ba_m, spec.seed);
    case Family::PA:
      return gen_pa(spec.n, spec.seed);
    case Family::HOT: {
      Network ref = gen_pa(spec.n, derive_seed(spec.seed, 1));
      return gen_hot(ref, derive_seed(spec.seed, 2));
    }
    case Family::ER: {
      int m = spec.er_edges > 0 ? spec.er_edges
                                : static_cast<int>(std::lround(spec.n * 49.0 / 24.0));
      return gen_er(spec.n, m, spec.seed);
    }
    case Family::WS:
      return gen_ws(spec.n, spec.ws_k, spec.ws_rewire, spec.seed);
  }
  throw std::invalid_argument("generate: unknown family");
}

}  // namespace netdesign
