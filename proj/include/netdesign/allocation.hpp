#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netdesign/centrality.hpp"
#include "netdesign/graph.hpp"
#include "netdesign/routing.hpp"

namespace netdesign {

enum class AllocScheme { UC, BC, EBC };

std::string alloc_name(AllocScheme s);
AllocScheme alloc_from_name(const std::string& name);

/// Per-edge link bandwidth in packets per step and direction, under the
/// fixed total budget sum C(e) = M.
struct BandwidthAllocation {
  std::vector<double> capacity;
  AllocScheme scheme = AllocScheme::UC;
  double c_max = 1.0;
};

/// UC: every edge gets 1. BC/EBC: C(e) proportional to the supplied
/// betweenness, scaled to the budget M. BC expects SPR-tagged centrality.
BandwidthAllocation allocate(const Network& net, const EdgeCentrality* centrality,
                             AllocScheme scheme);

/// Eq.-style critical rate: min over carrying edges of
/// 2 C(e) N(N-1) / B(e). Edges with zero betweenness carry no traffic and
/// are skipped; all-zero centrality is an error.
double analytic_rc(const Network& net, const BandwidthAllocation& alloc,
                   const EdgeCentrality& centrality);

/// Upper bound 2M/L for any design on this network.
double theorem_bound(const Network& net);
double theorem_bound(const Network& net, const GraphMetrics& m);

struct DesignProvenance {
  std::string topology;  // free-form label (family/params)
  RoutingKind routing = RoutingKind::SPR;
  AllocScheme scheme = AllocScheme::UC;
  std::uint64_t seed = 0;
};

/// One point in the design plane: X = the largest single-link bandwidth the
/// scheme needs, Y = the critical packet-generating rate it attains.
struct DesignPoint {
  double c_max = 0.0;
  double r_c = 0.0;
  DesignProvenance provenance;
  double bound = 0.0;  // 2M/L of the underlying network
  int n = 0;
  int m = 0;
};

/// Orchestrates centrality -> allocation -> analytic rate for one
/// (routing, scheme) combination.
DesignPoint design_point(const Network& net, RoutingKind routing, AllocScheme scheme,
                         const DesignProvenance& prov = {});

/// Limiting markers of the design plane: looping routing (everything stalls)
/// and the whole budget on one edge.
DesignPoint point_a(const Network& net);
DesignPoint point_b(const Network& net);

/// CSV: "topology,routing,scheme,seed,N,M,c_max,r_c,theorem_bound".
void write_design_points_csv(const std::vector<DesignPoint>& points, const std::string& path);

}  // namespace netdesign
