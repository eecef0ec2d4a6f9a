#include "netdesign/allocation.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace netdesign {

std::string alloc_name(AllocScheme s) {
  switch (s) {
    case AllocScheme::UC: return "uc";
    case AllocScheme::BC: return "bc";
    case AllocScheme::EBC: return "ebc";
  }
  return "?";
}

AllocScheme alloc_from_name(const std::string& name) {
  if (name == "uc") return AllocScheme::UC;
  if (name == "bc") return AllocScheme::BC;
  if (name == "ebc") return AllocScheme::EBC;
  throw std::invalid_argument("unknown allocation scheme: " + name);
}

BandwidthAllocation allocate(const Network& net, const EdgeCentrality* centrality,
                             AllocScheme scheme) {
  const int m = net.edge_count();
  BandwidthAllocation out;
  out.scheme = scheme;
  if (scheme == AllocScheme::UC) {
    out.capacity.assign(m, 1.0);
    out.c_max = 1.0;
    return out;
  }
  if (centrality == nullptr)
    throw std::invalid_argument("allocate: BC/EBC need betweenness values");
  if (static_cast<int>(centrality->value.size()) != m)
    throw std::invalid_argument("allocate: centrality/network mismatch");
  if (scheme == AllocScheme::BC && centrality->routing != RoutingKind::SPR)
    throw std::invalid_argument("allocate: BC is defined on shortest-path betweenness");
  double total = 0.0;
  for (double v : centrality->value) total += v;
  if (total <= 0.0) throw std::invalid_argument("allocate: all-zero betweenness");
  out.capacity.resize(m);
  for (int e = 0; e < m; ++e) out.capacity[e] = centrality->value[e] / total * m;
  out.c_max = *std::max_element(out.capacity.begin(), out.capacity.end());
  return out;
}

double analytic_rc(const Network& net, const BandwidthAllocation& alloc,
                   const EdgeCentrality& centrality) {
  const int m = net.edge_count();
  if (static_cast<int>(alloc.capacity.size()) != m ||
      static_cast<int>(centrality.value.size()) != m)
    throw std::invalid_argument("analytic_rc: size mismatch");
  const double pairs = static_cast<double>(net.node_count()) * (net.node_count() - 1);
  double rc = -1.0;
  for (int e = 0; e < m; ++e) {
    if (centrality.value[e] <= 0.0) continue;  // carries no traffic
    double r = 2.0 * alloc.capacity[e] * pairs / centrality.value[e];
    if (rc < 0.0 || r < rc) rc = r;
  }
  if (rc < 0.0) throw std::invalid_argument("analytic_rc: no edge carries traffic");
  return rc;
}

double theorem_bound(const Network& net) { return theorem_bound(net, metrics(net)); }

double theorem_bound(const Network& net, const GraphMetrics& m) {
  return 2.0 * net.edge_count() / m.average_path_length;
}

DesignPoint design_point(const Network& net, RoutingKind routing, AllocScheme scheme,
                         const DesignProvenance& prov) {
  if (routing == RoutingKind::ExplicitPathSet)
    throw std::invalid_argument("design_point: SPR or EFR only");
  EdgeCentrality gamma = effective_betweenness(net, routing);
  const EdgeCentrality* alloc_basis = nullptr;
  EdgeCentrality spr_values;
  switch (scheme) {
    case AllocScheme::UC:
      break;
    case AllocScheme::BC:
      if (routing == RoutingKind::SPR) {
        alloc_basis = &gamma;
      } else {
        spr_values = edge_betweenness(net);
        alloc_basis = &spr_values;
      }
      break;
    case AllocScheme::EBC:
      alloc_basis = &gamma;
      break;
  }
  BandwidthAllocation alloc = allocate(net, alloc_basis, scheme);
  DesignPoint p;
  p.c_max = alloc.c_max;
  p.r_c = analytic_rc(net, alloc, gamma);
  p.provenance = prov;
  p.provenance.routing = routing;
  p.provenance.scheme = scheme;
  p.bound = theorem_bound(net);
  p.n = net.node_count();
  p.m = net.edge_count();
  return p;
}

DesignPoint point_a(const Network& net) {
  DesignPoint p;
  p.c_max = 1.0;
  p.r_c = 0.0;  // looping routing: packets never leave the network
  p.provenance.topology = "limit-A";
  p.bound = theorem_bound(net);
  p.n = net.node_count();
  p.m = net.edge_count();
  return p;
}

DesignPoint point_b(const Network& net) {
  DesignPoint p;
  p.c_max = static_cast<double>(net.edge_count());  // whole budget on one edge
  p.r_c = 0.0;
  p.provenance.topology = "limit-B";
  p.bound = theorem_bound(net);
  p.n = net.node_count();
  p.m = net.edge_count();
  return p;
}

void write_design_points_csv(const std::vector<DesignPoint>& points, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "topology,routing,scheme,seed,N,M,c_max,r_c,theorem_bound\n";
  for (const DesignPoint& p : points)
    out << p.provenance.topology << "," << routing_name(p.provenance.routing) << ","
        << alloc_name(p.provenance.scheme) << "," << p.provenance.seed << "," << p.n << "," << p.m
        << "," << p.c_max << "," << p.r_c << "," << p.bound << "\n";
}

}  // namespace netdesign
