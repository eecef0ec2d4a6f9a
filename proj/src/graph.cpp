#include "netdesign/graph.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netdesign {

Network::Network(int node_count, std::vector<Edge> edges)
    : n_(node_count), edges_(std::move(edges)) {
  if (n_ < 2) throw std::invalid_argument("Network: need at least 2 nodes");
  adj_.resize(n_);
  std::set<std::pair<int, int>> seen;
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("Network: edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("Network: self-loop");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) throw std::invalid_argument("Network: parallel edge");
    adj_[e.u].emplace_back(e.v, id);
    adj_[e.v].emplace_back(e.u, id);
  }
  // connectivity
  std::vector<char> vis(n_, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [v, id] : adj_[u]) {
      if (!vis[v]) {
        vis[v] = 1;
        ++count;
        q.push(v);
      }
    }
  }
  if (count != n_) throw std::invalid_argument("Network: graph is not connected");
}

bool Network::has_edge(int u, int v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  for (auto [w, id] : a)
    if (w == other) return true;
  return false;
}

Network Network::load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Edge> edges;
  int max_node = -1;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    int u, v;
    if (ss >> u >> v) {
      edges.push_back({u, v});
      max_node = std::max({max_node, u, v});
    }
  }
  if (edges.empty()) throw std::runtime_error("empty edge list: " + path);
  return Network(max_node + 1, std::move(edges));
}

void Network::save_edge_list(const std::string& path, const std::string& header_comment) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  for (const Edge& e : edges_) out << e.u << " " << e.v << "\n";
}

std::vector<int> shortest_path_lengths(const Network& net, int source) {
  if (source < 0 || source >= net.node_count())
    throw std::invalid_argument("shortest_path_lengths: invalid source");
  std::vector<int> dist(net.node_count(), -1);
  std::vector<int> frontier{source};
  dist[source] = 0;
  std::vector<int> next;
  int d = 0;
  while (!frontier.empty()) {
    next.clear();
    ++d;
    for (int u : frontier)
      for (auto [v, id] : net.adjacency(u))
        if (dist[v] < 0) {
          dist[v] = d;
          next.push_back(v);
        }
    frontier.swap(next);
  }
  return dist;
}

namespace {

// one BFS; returns (sum of distances from s, eccentricity)
std::pair<long long, int> bfs_sums(const Network& net, int s, std::vector<int>& dist,
                                   std::vector<int>& frontier, std::vector<int>& next) {
  std::fill(dist.begin(), dist.end(), -1);
  frontier.assign(1, s);
  dist[s] = 0;
  long long sum = 0;
  int ecc = 0, d = 0;
  while (!frontier.empty()) {
    next.clear();
    ++d;
    for (int u : frontier)
      for (auto [v, id] : net.adjacency(u))
        if (dist[v] < 0) {
          dist[v] = d;
          sum += d;
          ecc = d;
          next.push_back(v);
        }
    frontier.swap(next);
  }
  return {sum, ecc};
}

GraphMetrics finish_metrics(const Network& net, long long total, int diameter) {
  GraphMetrics m;
  const double n = net.node_count();
  m.average_path_length = static_cast<double>(total) / (n * (n - 1.0));
  m.diameter = diameter;
  m.degree_sequence.resize(net.node_count());
  for (int v = 0; v < net.node_count(); ++v) m.degree_sequence[v] = net.degree(v);
  return m;
}

}  // namespace

GraphMetrics metrics(const Network& net) {
  const int n = net.node_count();
  long long total = 0;
  int diameter = 0;
#pragma omp parallel
  {
    std::vector<int> dist(n), frontier, next;
    long long local_sum = 0;
    int local_ecc = 0;
#pragma omp for schedule(static)
    for (int s = 0; s < n; ++s) {
      auto [sum, ecc] = bfs_sums(net, s, dist, frontier, next);
      local_sum += sum;
      local_ecc = std::max(local_ecc, ecc);
    }
#pragma omp critical
    {
      total += local_sum;
      diameter = std::max(diameter, local_ecc);
    }
  }
  return finish_metrics(net, total, diameter);
}

GraphMetrics metrics_serial(const Network& net) {
  const int n = net.node_count();
  std::vector<int> dist(n), frontier, next;
  long long total = 0;
  int diameter = 0;
  for (int s = 0; s < n; ++s) {
    auto [sum, ecc] = bfs_sums(net, s, dist, frontier, next);
    total += sum;
    diameter = std::max(diameter, ecc);
  }
  return finish_metrics(net, total, diameter);
}

std::vector<std::vector<int>> distance_matrix(const Network& net) {
  const int n = net.node_count();
  std::vector<std::vector<int>> dm(n);
#pragma omp parallel for schedule(static)
  for (int s = 0; s < n; ++s) dm[s] = shortest_path_lengths(net, s);
  return dm;
}

}  // namespace netdesign
