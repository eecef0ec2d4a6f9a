#pragma once

#include <cstdint>
#include <string>

#include "netdesign/graph.hpp"

namespace netdesign {

enum class Family { BA, PA, HOT, ER, WS };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// One generator request. Family parameters not used by the family are ignored.
struct TopologySpec {
  Family family = Family::BA;
  int n = 0;
  int ba_m = 2;            // BA: edges per new node
  int er_edges = 0;        // ER: target edge count (0 -> ~2n by convention here)
  int ws_k = 4;            // WS: base ring degree, even
  double ws_rewire = 0.15; // WS: fraction of edges rewired
  std::uint64_t seed = 0;
};

/// Dispatch on spec.family. HOT generates its PA reference internally from
/// the same n and a seed derived from spec.seed.
Network generate(const TopologySpec& spec);

/// Barabasi-Albert: seed clique of m+1 nodes, then m preferential edges per
/// new node (duplicate targets re-drawn). M = C(m+1,2) + (n-m-1)m.
Network gen_ba(int n, int m, std::uint64_t seed);

/// G(n,p) with p chosen so the expected edge count is m_target, conditioned
/// on connectedness. Resamples up to an attempt cap; past the cap the sample
/// is repaired by moving non-bridge edges across components, which keeps the
/// drawn edge count.
Network gen_er(int n, int m_target, std::uint64_t seed, int max_attempts = 16);

/// Watts-Strogatz ring of degree k with exactly round(rewire_frac * M) edges
/// rewired; rewires that would disconnect or duplicate are re-drawn.
Network gen_ws(int n, int k, double rewire_frac, std::uint64_t seed);

/// BA variant with a rich club: 3-clique start, one preferential edge per new
/// node, then internal preferential edges until M = min(2n, n(n-1)/2).
Network gen_pa(int n, std::uint64_t seed);

/// Three-tier rewiring of a PA reference: small low-degree core mesh, the
/// top-decile-degree nodes as gateways, everything else periphery. Preserves
/// the reference degree sequence exactly.
Network gen_hot(const Network& reference, std::uint64_t seed);

}  // namespace netdesign
