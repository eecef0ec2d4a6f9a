#include "netdesign/sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace netdesign {

namespace {

void check_config(const SimulationConfig& cfg) {
  if (cfg.injection_rate < 1) throw std::invalid_argument("simulate: R must be >= 1");
  if (cfg.total_steps <= cfg.transient_steps + 2 * cfg.window_steps)
    throw std::invalid_argument("simulate: total_steps too small for the measurement windows");
  if (cfg.window_steps < 1) throw std::invalid_argument("simulate: window_steps must be >= 1");
}

}  // namespace

OrderParameterEstimate simulate(const Network& net, const RoutingModel& model,
                                const BandwidthAllocation& alloc, const SimulationConfig& cfg) {
  check_config(cfg);
  const int n = net.node_count();
  const int m = net.edge_count();
  if (static_cast<int>(alloc.capacity.size()) != m)
    throw std::invalid_argument("simulate: allocation/network mismatch");
  if (model.network().node_count() != n)
    throw std::invalid_argument("simulate: model built on a different network");

  // directed interface 2e = edge e forward (u->v), 2e+1 = reverse
  std::vector<std::deque<std::int32_t>> queue(2 * m);
  std::vector<double> credit(2 * m, 0.0);
  Rng rng(cfg.seed);

  OrderParameterEstimate est;
  est.injection_rate = cfg.injection_rate;
  est.theta_series.reserve(cfg.total_steps + 1);
  long long theta = 0;
  est.theta_series.push_back(0);

  auto interface_of = [&](int from, int to) {
    for (auto [w, eid] : net.adjacency(from))
      if (w == to) return net.edge(eid).u == from ? 2 * eid : 2 * eid + 1;
    throw std::logic_error("simulate: next hop is not a neighbor");
  };

  std::vector<std::pair<std::int32_t, std::int32_t>> arrivals;  // (node, dst)
  for (int step = 1; step <= cfg.total_steps; ++step) {
    // injection; new packets may be served this same step if they reach the head
    for (long long k = 0; k < cfg.injection_rate; ++k) {
      int src = static_cast<int>(rand_below(rng, n));
      int dst = static_cast<int>(rand_below(rng, n - 1));
      if (dst >= src) ++dst;
      int hop = model.next_hop(src, dst, rng);
      queue[interface_of(src, hop)].push_back(dst);
      ++theta;
      ++est.injected;
    }

    // service: drain all interfaces against this step's queues, then route
    arrivals.clear();
    for (int e = 0; e < m; ++e) {
      for (int dir = 0; dir < 2; ++dir) {
        const int iface = 2 * e + dir;
        credit[iface] += alloc.capacity[e];
        long long quota = static_cast<long long>(std::floor(credit[iface]));
        credit[iface] -= static_cast<double>(quota);  // whole credits do not bank
        const int to = dir == 0 ? net.edge(e).v : net.edge(e).u;
        auto& q = queue[iface];
        while (quota > 0 && !q.empty()) {
          arrivals.push_back({to, q.front()});
          q.pop_front();
          --quota;
        }
      }
    }
    for (auto [node, dst] : arrivals) {
      if (node == dst) {
        ++est.delivered;
        --theta;
      } else {
        int hop = model.next_hop(node, dst, rng);
        queue[interface_of(node, hop)].push_back(dst);
      }
    }

    est.theta_series.push_back(theta);
    if (theta > cfg.theta_cap) {
      est.congested_early_exit = true;
      break;
    }
  }

  // conservation is exact by construction; verify anyway
  long long in_flight = 0;
  for (const auto& q : queue) in_flight += static_cast<long long>(q.size());
  if (est.injected != est.delivered + in_flight || in_flight != theta)
    throw std::logic_error("simulate: packet conservation violated");

  if (est.congested_early_exit) {
    const int t_end = static_cast<int>(est.theta_series.size()) - 1;
    const int t_ref = std::min(cfg.transient_steps, t_end - 1);
    est.eta = static_cast<double>(est.theta_series[t_end] - est.theta_series[t_ref]) /
              (static_cast<double>(cfg.injection_rate) * (t_end - t_ref));
    est.eta = std::max(est.eta, 0.0);
    return est;
  }

  // order parameter: mean growth over consecutive windows after the transient
  double sum = 0.0;
  int windows = 0;
  for (int t = cfg.transient_steps; t + cfg.window_steps <= cfg.total_steps;
       t += cfg.window_steps) {
    sum += static_cast<double>(est.theta_series[t + cfg.window_steps] - est.theta_series[t]) /
           (static_cast<double>(cfg.injection_rate) * cfg.window_steps);
    ++windows;
  }
  est.windows_averaged = windows;
  est.eta = std::max(windows > 0 ? sum / windows : 0.0, 0.0);
  return est;
}

RcEstimate find_rc(const Network& net, const RoutingModel& model,
                   const BandwidthAllocation& alloc, const RcSweepConfig& cfg) {
  RcEstimate out;
  auto probe = [&](long long r) {
    SimulationConfig pc = cfg.probe;
    pc.injection_rate = r;
    pc.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(out.probes));
    ++out.probes;
    return simulate(net, model, alloc, pc).eta;
  };

  long long lo = 0;  // highest rate observed free
  long long hi = 1;
  while (true) {
    if (hi > cfg.r_cap) {
      out.r_c = cfg.r_cap;
      out.unsaturated = true;
      return out;
    }
    if (probe(hi) > cfg.eta_threshold) break;
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if (probe(mid) > cfg.eta_threshold)
      hi = mid;
    else
      lo = mid;
  }
  out.r_c = hi;
  return out;
}

void write_theta_trace(const OrderParameterEstimate& est, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "step,theta\n";
  for (size_t t = 0; t < est.theta_series.size(); ++t)
    out << t << "," << est.theta_series[t] << "\n";
}

void write_run_summary(const SimulationConfig& cfg, const OrderParameterEstimate& est,
                       const std::string& path) {
  nlohmann::json j;
  j["config"] = {{"injection_rate", cfg.injection_rate},
                 {"total_steps", cfg.total_steps},
                 {"transient_steps", cfg.transient_steps},
                 {"window_steps", cfg.window_steps},
                 {"seed", cfg.seed},
                 {"theta_cap", cfg.theta_cap}};
  j["eta"] = est.eta;
  j["windows_averaged"] = est.windows_averaged;
  j["congested_early_exit"] = est.congested_early_exit;
  j["injected"] = est.injected;
  j["delivered"] = est.delivered;
  j["final_theta"] = est.theta_series.empty() ? 0 : est.theta_series.back();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace netdesign
