#pragma once

#include <string>
#include <vector>

#include "netdesign/graph.hpp"
#include "netdesign/routing.hpp"

namespace netdesign {

/// Per-edge betweenness under a routing model, ordered-pair convention:
/// value(e) = sum over ordered pairs (u,v) of (candidate paths through e) /
/// (candidate paths). mean_candidate_length is the delta-weighted mean hop
/// length of candidate paths (equals L for SPR), which ties the values to
/// sum value(e) = N(N-1) * mean_candidate_length.
struct EdgeCentrality {
  std::vector<double> value;
  double b_max = 0.0;
  RoutingKind routing = RoutingKind::SPR;
  double mean_candidate_length = 0.0;
};

/// Classical edge betweenness (shortest paths). Brandes dependency
/// accumulation, parallel over sources.
EdgeCentrality edge_betweenness(const Network& net);
EdgeCentrality edge_betweenness_serial(const Network& net);

/// Effective betweenness under SPR or EFR candidate paths.
EdgeCentrality effective_betweenness(const Network& net, RoutingKind kind);
EdgeCentrality effective_betweenness_serial(const Network& net, RoutingKind kind);

/// Model overload; dispatches on the model's kind. Explicit path sets tally
/// their single stored path per pair.
EdgeCentrality effective_betweenness(const Network& net, const RoutingModel& model);

/// CSV rows "edge_id,u,v,betweenness".
void write_centrality_csv(const Network& net, const EdgeCentrality& ec, const std::string& path);

}  // namespace netdesign
