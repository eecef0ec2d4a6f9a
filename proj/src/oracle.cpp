#include "netdesign/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace netdesign {

namespace {

// all simple paths src -> dst by recursive DFS over the raw edge list
void all_paths(const Network& net, int dst, std::vector<int>& cur, std::vector<char>& used,
               std::vector<std::vector<int>>& out) {
  int x = cur.back();
  if (x == dst) {
    out.push_back(cur);
    return;
  }
  for (auto [y, id] : net.adjacency(x)) {
    if (used[y]) continue;
    used[y] = 1;
    cur.push_back(y);
    all_paths(net, dst, cur, used, out);
    cur.pop_back();
    used[y] = 0;
  }
}

long long path_cost(const Network& net, const std::vector<int>& p, RoutingKind kind) {
  if (kind == RoutingKind::SPR) return static_cast<long long>(p.size()) - 1;
  long long c = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) c += net.degree(p[i]);  // destination excluded
  return c;
}

}  // namespace

EdgeCentrality betweenness_oracle(const Network& net, RoutingKind kind) {
  const int n = net.node_count();
  if (n > 12) throw std::invalid_argument("betweenness_oracle: refused above 12 nodes");
  if (kind == RoutingKind::ExplicitPathSet)
    throw std::invalid_argument("betweenness_oracle: SPR or EFR only");

  EdgeCentrality out;
  out.routing = kind;
  out.value.assign(net.edge_count(), 0.0);
  double len_sum = 0.0;

  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      std::vector<std::vector<int>> paths;
      std::vector<int> cur{u};
      std::vector<char> used(n, 0);
      used[u] = 1;
      all_paths(net, v, cur, used, paths);
      long long best = std::numeric_limits<long long>::max();
      for (const auto& p : paths) best = std::min(best, path_cost(net, p, kind));
      long long count = 0;
      for (const auto& p : paths)
        if (path_cost(net, p, kind) == best) ++count;
      for (const auto& p : paths) {
        if (path_cost(net, p, kind) != best) continue;
        len_sum += static_cast<double>(p.size() - 1) / count;
        for (size_t i = 0; i + 1 < p.size(); ++i)
          for (auto [w, id] : net.adjacency(p[i]))
            if (w == p[i + 1]) {
              out.value[id] += 1.0 / count;
              break;
            }
      }
    }

  out.b_max = *std::max_element(out.value.begin(), out.value.end());
  out.mean_candidate_length = len_sum / (static_cast<double>(n) * (n - 1));
  return out;
}

bool path_set_within_limit(const Network& net, const PathPool& pool, int limit) {
  const int n = net.node_count();
  if (pool.n != n) throw std::invalid_argument("path_set_within_limit: size mismatch");
  if (limit < 1) return false;

  // per pair, candidates as edge-id lists
  struct PairCands {
    std::vector<std::vector<int>> edge_lists;
  };
  std::vector<PairCands> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      PairCands pc;
      for (const auto& p : pool.at(u, v)) {
        std::vector<int> ids;
        for (size_t i = 0; i + 1 < p.size(); ++i)
          for (auto [w, id] : net.adjacency(p[i]))
            if (w == p[i + 1]) {
              ids.push_back(id);
              break;
            }
        pc.edge_lists.push_back(std::move(ids));
      }
      if (pc.edge_lists.empty()) return false;
      pairs.push_back(std::move(pc));
    }
  // most constrained pairs first
  std::sort(pairs.begin(), pairs.end(), [](const PairCands& a, const PairCands& b) {
    return a.edge_lists.size() < b.edge_lists.size();
  });

  std::vector<int> occ(net.edge_count(), 0);
  // depth-first assignment with pruning on the occupancy cap
  std::vector<size_t> choice(pairs.size(), 0);
  size_t depth = 0;
  while (true) {
    if (depth == pairs.size()) return true;
    bool advanced = false;
    auto& cands = pairs[depth].edge_lists;
    for (size_t c = choice[depth]; c < cands.size(); ++c) {
      bool fits = true;
      for (int e : cands[c])
        if (occ[e] + 1 > limit) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (int e : cands[c]) ++occ[e];
      choice[depth] = c;
      ++depth;
      if (depth < pairs.size()) choice[depth] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    // backtrack
    if (depth == 0) return false;
    --depth;
    for (int e : pairs[depth].edge_lists[choice[depth]]) --occ[e];
    ++choice[depth];
  }
}

}  // namespace netdesign
