#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netdesign/graph.hpp"
#include "netdesign/rng.hpp"

namespace netdesign {

enum class RoutingKind { SPR, EFR, ExplicitPathSet };

std::string routing_name(RoutingKind k);
RoutingKind routing_from_name(const std::string& name);

/// One simple path per ordered node pair. Paths are node sequences starting
/// at u and ending at v.
class PathSet {
 public:
  explicit PathSet(int node_count);

  int node_count() const { return n_; }
  const std::vector<int>& path(int u, int v) const { return paths_[u * n_ + v]; }
  void set_path(int u, int v, std::vector<int> p);
  bool complete() const;  // a path present for every ordered pair

  /// Per-edge occurrence counts against a network (each traversal counts once).
  std::vector<int> occurrences(const Network& net) const;
  int max_occurrence(const Network& net) const;

  /// Text form, one line per pair: "u v : n0 n1 ... nk".
  void save(const std::string& path) const;
  static PathSet load(const std::string& path);

 private:
  int n_;
  std::vector<std::vector<int>> paths_;
};

/// Topology-based routing model. For SPR and EFR this holds, per destination
/// t, the minimal cost to reach t from every node and the number of
/// cost-minimal simple paths (candidate paths); next hops are read off the
/// induced DAG. Explicit path sets route along their stored paths.
class RoutingModel {
 public:
  static RoutingModel build_spr(const Network& net);
  static RoutingModel build_efr(const Network& net);
  static RoutingModel from_path_set(const Network& net, PathSet paths);

  RoutingKind kind() const { return kind_; }
  const Network& network() const { return net_; }

  /// delta^Gamma(u,v): number of candidate paths for the ordered pair.
  double candidate_count(int u, int v) const;
  /// Model cost of the pair: hops for SPR, degree sum (destination excluded)
  /// for EFR.
  std::int64_t cost(int u, int v) const;

  /// Neighbor of current on a candidate path to dst, drawn uniformly over
  /// candidate paths. Throws if current == dst.
  int next_hop(int current, int dst, Rng& rng) const;

  /// EFR edge weight convention: cost of leaving x is x's degree.
  std::int64_t hop_weight(int from) const;

  /// Stored path of an ExplicitPathSet model; throws for other kinds.
  const std::vector<int>& stored_path(int u, int v) const;

 private:
  RoutingModel(RoutingKind kind, const Network& net);

  RoutingKind kind_;
  Network net_;
  // [t][u]: cost of u -> t and number of cost-minimal u -> t paths
  std::vector<std::vector<std::int64_t>> cost_to_;
  std::vector<std::vector<double>> sigma_to_;
  std::vector<std::vector<int>> pathset_paths_;  // ExplicitPathSet backing
};

/// Candidate-path pool per ordered pair, the raw material for the min-max
/// heuristic.
struct PathPool {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> candidates;  // [u*n+v]

  const std::vector<std::vector<int>>& at(int u, int v) const { return candidates[u * n + v]; }
};

struct PoolConfig {
  int max_spr_per_pair = 8;
  int max_efr_per_pair = 8;
  int yen_k = 8;        // 0 disables the k-shortest supplement
  int yen_max_n = 200;  // Yen only below this size
};

/// Union of SPR candidates, EFR candidates and Yen-style k-shortest simple
/// paths (deduplicated).
PathPool build_pool(const Network& net, const PoolConfig& cfg = {});

/// Every simple path for every ordered pair; refused above 10 nodes.
PathPool exhaustive_pool(const Network& net);

/// Yen-style k shortest simple paths (hop metric) for one ordered pair.
std::vector<std::vector<int>> k_shortest_paths(const Network& net, int src, int dst, int k);

/// One shortest path per ordered pair (lexicographic tie-break), the usual
/// starting point for the heuristic.
PathSet spr_path_set(const Network& net);

/// Greedy min-max: repeatedly replace one pair's path with a pool candidate
/// when that strictly lowers (max occurrence, edges at max); first
/// improvement, fixed pair scan order, until a full pass changes nothing.
PathSet greedy_minmax(const Network& net, const PathPool& pool, PathSet init);

}  // namespace netdesign
