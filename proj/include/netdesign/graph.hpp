#pragma once

#include <string>
#include <utility>
#include <vector>

namespace netdesign {

struct Edge {
  int u = -1;
  int v = -1;
};

/// Undirected simple connected graph. Nodes are 0..n-1; edge ids are stable
/// and equal to the edge's position in edges(). Immutable after construction.
class Network {
 public:
  /// Validates simplicity (no self-loops or parallel edges) and connectivity;
  /// throws std::invalid_argument on violation.
  Network(int node_count, std::vector<Edge> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  /// Neighbors of u as (neighbor, edge id) pairs, in insertion order.
  const std::vector<std::pair<int, int>>& adjacency(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }
  bool has_edge(int u, int v) const;

  /// Plain-text edge list: one "u v" per line, 0-based ids, '#' comments.
  static Network load_edge_list(const std::string& path);
  void save_edge_list(const std::string& path, const std::string& header_comment = "") const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

struct GraphMetrics {
  double average_path_length = 0.0;  // ordered-pair mean, hops
  int diameter = 0;                  // max over pairs, hops
  std::vector<int> degree_sequence;  // per node, unsorted
};

/// BFS hop distances from source; throws std::invalid_argument on a bad id.
std::vector<int> shortest_path_lengths(const Network& net, int source);

/// L, D and degrees. Parallelizes the per-source BFS sweep over sources.
GraphMetrics metrics(const Network& net);
/// Serial reference for the same computation.
GraphMetrics metrics_serial(const Network& net);

/// Full hop-distance matrix, row per source. Computed on demand; O(N^2) memory.
std::vector<std::vector<int>> distance_matrix(const Network& net);

}  // namespace netdesign
