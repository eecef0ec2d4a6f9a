#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netdesign/allocation.hpp"
#include "netdesign/graph.hpp"
#include "netdesign/routing.hpp"

namespace netdesign {

struct SimulationConfig {
  long long injection_rate = 1;   // R, packets per step
  int total_steps = 2100;
  int transient_steps = 1000;
  int window_steps = 100;         // measurement window for the order parameter
  std::uint64_t seed = 0;
  long long theta_cap = 20'000'000;  // runaway-queue guard; early congested verdict
};

struct OrderParameterEstimate {
  double eta = 0.0;                      // window-averaged growth per injected packet
  std::vector<long long> theta_series;   // packets in the network after each step
  long long injection_rate = 0;
  int windows_averaged = 0;
  bool congested_early_exit = false;     // theta cap hit before total_steps
  long long injected = 0;
  long long delivered = 0;
};

/// Discrete-time run: each step injects R packets at uniform random sources
/// with uniform random destinations, then every directed interface adds its
/// C(e) credit and forwards up to floor(credit) queued packets one hop.
/// Queues are unbounded FIFO; unused whole credits do not bank.
OrderParameterEstimate simulate(const Network& net, const RoutingModel& model,
                                const BandwidthAllocation& alloc, const SimulationConfig& cfg);

struct RcSweepConfig {
  double eta_threshold = 0.02;
  long long r_cap = 1'000'000;
  SimulationConfig probe;   // per-probe settings; seed is re-derived per probe
  std::uint64_t seed = 0;
};

struct RcEstimate {
  long long r_c = 0;       // smallest integer rate with eta above threshold
  bool unsaturated = false;  // no congestion found at or below r_cap
  int probes = 0;
};

/// Locates the congestion onset by geometric bracketing from R = 1 followed
/// by integer bisection; every probe simulates with a freshly derived seed.
RcEstimate find_rc(const Network& net, const RoutingModel& model,
                   const BandwidthAllocation& alloc, const RcSweepConfig& cfg);

/// CSV "step,theta".
void write_theta_trace(const OrderParameterEstimate& est, const std::string& path);
/// Config echo plus the estimate as a small JSON record.
void write_run_summary(const SimulationConfig& cfg, const OrderParameterEstimate& est,
                       const std::string& path);

}  // namespace netdesign
