#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netdesign/allocation.hpp"
#include "netdesign/generators.hpp"
#include "netdesign/graph.hpp"
#include "netdesign/routing.hpp"
#include "netdesign/sim.hpp"

namespace netdesign {

inline constexpr const char* kToolVersion = "0.1.0";

enum class EvalMode { Analytic, Simulated, Both };

struct SchemeCombo {
  AllocScheme alloc = AllocScheme::UC;
  RoutingKind routing = RoutingKind::SPR;
};

/// "uc-spr", "ebc-efr", ...
SchemeCombo combo_from_name(const std::string& name);
std::string combo_name(const SchemeCombo& c);

struct ExperimentPlan {
  std::vector<Family> families;
  std::vector<int> sizes;        // one entry for table mode, ascending for scaling
  int instances = 10;
  std::vector<SchemeCombo> schemes;
  EvalMode mode = EvalMode::Analytic;
  std::string out_dir;
  std::uint64_t master_seed = 1;
  RcSweepConfig sweep;           // simulated-mode settings
};

struct CellResult {
  Family family = Family::BA;
  int n = 0;
  SchemeCombo scheme;
  int instances_ok = 0;
  int instances_failed = 0;
  double rc_mean = 0.0, rc_sd = 0.0;          // analytic
  double cmax_mean = 0.0, cmax_sd = 0.0;
  double bound_mean = 0.0;
  double sim_rc_mean = 0.0, sim_rc_sd = 0.0;  // simulated (when requested)
};

/// Per-(family, scheme) means over independently seeded instances. Writes
/// table.csv and manifest.json into plan.out_dir when it is non-empty.
std::vector<CellResult> run_table(const ExperimentPlan& plan);

struct SizePoint {
  int n = 0;
  double mean = 0.0;
  double sd = 0.0;
};

struct ScalingFit {
  Family family = Family::BA;
  std::string quantity;          // b_max, b_efr_max, rc_<combo>, cmax_<combo>
  std::vector<SizePoint> points;
  double exponent = 0.0;         // least-squares slope on log-log means
  double residual = 0.0;         // rms residual of the fit
};

/// Instance means of B_max, B^(EFR)_max and per-scheme r_c / C_max across
/// sizes, with log-log exponent fits. Writes scaling.csv, fits.csv and
/// manifest.json when plan.out_dir is non-empty.
std::vector<ScalingFit> run_scaling(const ExperimentPlan& plan);

/// Least-squares exponent on log-log (n, mean) points; throws when fewer
/// than two usable points exist.
void fit_loglog(ScalingFit& fit);

/// Design-plane sketch for one network: the four closed-form schemes, the
/// greedy min-max point C, and the limiting markers A and B.
std::vector<DesignPoint> achievable_sketch(const Network& net, const PoolConfig& pool_cfg = {});
void emit_achievable_sketch(const Network& net, const std::string& csv_path,
                            const PoolConfig& pool_cfg = {});

/// Worker threads for cell/instance parallelism: NETDESIGN_THREADS overrides
/// the OpenMP default.
void apply_thread_env();

}  // namespace netdesign
