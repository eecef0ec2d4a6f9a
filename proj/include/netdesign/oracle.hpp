#pragma once

#include <vector>

#include "netdesign/centrality.hpp"
#include "netdesign/graph.hpp"
#include "netdesign/routing.hpp"

namespace netdesign {

/// Exhaustive betweenness oracle: enumerates every simple path per ordered
/// pair, keeps the cost-minimal ones under the routing objective (hops for
/// SPR, degree sum without the destination for EFR) and tallies the exact
/// fractions. Deliberately shares no code with the production kernels.
/// Refused above 12 nodes.
EdgeCentrality betweenness_oracle(const Network& net, RoutingKind kind);

/// True when a complete path set with per-edge occurrence <= limit exists,
/// drawing paths from the pool. Depth-first over pairs with occupancy
/// pruning; intended for the min-max optimality check on tiny graphs.
bool path_set_within_limit(const Network& net, const PathPool& pool, int limit);

}  // namespace netdesign
