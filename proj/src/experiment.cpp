#include "netdesign/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace netdesign {

namespace fs = std::filesystem;

SchemeCombo combo_from_name(const std::string& name) {
  auto dash = name.find('-');
  if (dash == std::string::npos)
    throw std::invalid_argument("scheme must look like uc-spr: " + name);
  return {alloc_from_name(name.substr(0, dash)), routing_from_name(name.substr(dash + 1))};
}

std::string combo_name(const SchemeCombo& c) {
  return alloc_name(c.alloc) + "-" + routing_name(c.routing);
}

void apply_thread_env() {
  if (const char* env = std::getenv("NETDESIGN_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) omp_set_num_threads(t);
  }
}

namespace {

struct InstanceValues {
  bool ok = false;
  double bound = 0.0;
  double b_max = 0.0;
  double b_efr_max = 0.0;
  std::vector<double> rc;      // per scheme
  std::vector<double> cmax;    // per scheme
  std::vector<double> sim_rc;  // per scheme, simulated mode only
};

std::uint64_t instance_seed(const ExperimentPlan& plan, size_t family_idx, size_t size_idx,
                            int instance) {
  return derive_seed(plan.master_seed,
                     (family_idx * 1000 + size_idx) * 1000 + static_cast<size_t>(instance));
}

TopologySpec spec_for(Family family, int n, std::uint64_t seed) {
  TopologySpec s;
  s.family = family;
  s.n = n;
  s.seed = seed;
  return s;
}

// evaluates every requested scheme on one generated instance; centrality is
// computed once per routing algorithm and shared across schemes
InstanceValues evaluate_instance(const ExperimentPlan& plan, Family family, int n,
                                 std::uint64_t seed) {
  InstanceValues iv;
  iv.rc.assign(plan.schemes.size(), 0.0);
  iv.cmax.assign(plan.schemes.size(), 0.0);
  iv.sim_rc.assign(plan.schemes.size(), 0.0);

  Network net = generate(spec_for(family, n, seed));
  GraphMetrics gm = metrics(net);
  iv.bound = theorem_bound(net, gm);

  bool need_efr = false;
  for (const auto& s : plan.schemes)
    if (s.routing == RoutingKind::EFR) need_efr = true;

  EdgeCentrality spr = edge_betweenness(net);
  EdgeCentrality efr;
  if (need_efr) efr = effective_betweenness(net, RoutingKind::EFR);
  iv.b_max = spr.b_max;
  iv.b_efr_max = need_efr ? efr.b_max : 0.0;

  for (size_t i = 0; i < plan.schemes.size(); ++i) {
    const SchemeCombo& sc = plan.schemes[i];
    const EdgeCentrality& gamma = sc.routing == RoutingKind::EFR ? efr : spr;
    const EdgeCentrality* basis = nullptr;
    if (sc.alloc == AllocScheme::BC) basis = &spr;
    if (sc.alloc == AllocScheme::EBC) basis = &gamma;
    BandwidthAllocation alloc = allocate(net, basis, sc.alloc);
    if (plan.mode != EvalMode::Simulated) {
      iv.rc[i] = analytic_rc(net, alloc, gamma);
      iv.cmax[i] = alloc.c_max;
    }
    if (plan.mode != EvalMode::Analytic) {
      RoutingModel model = sc.routing == RoutingKind::EFR ? RoutingModel::build_efr(net)
                                                          : RoutingModel::build_spr(net);
      RcSweepConfig sweep = plan.sweep;
      sweep.seed = derive_seed(seed, 7700 + i);
      iv.sim_rc[i] = static_cast<double>(find_rc(net, model, alloc, sweep).r_c);
      iv.cmax[i] = alloc.c_max;
    }
  }
  iv.ok = true;
  return iv;
}

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
  MeanSd out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= xs.size();
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.sd = xs.size() > 1 ? std::sqrt(ss / (xs.size() - 1)) : 0.0;
  return out;
}

nlohmann::json plan_manifest(const ExperimentPlan& plan) {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["master_seed"] = plan.master_seed;
  j["instances"] = plan.instances;
  j["mode"] = plan.mode == EvalMode::Analytic    ? "analytic"
              : plan.mode == EvalMode::Simulated ? "simulated"
                                                 : "both";
  for (Family f : plan.families) j["families"].push_back(family_name(f));
  for (int n : plan.sizes) j["sizes"].push_back(n);
  for (const auto& s : plan.schemes) j["schemes"].push_back(combo_name(s));
  for (size_t fi = 0; fi < plan.families.size(); ++fi)
    for (size_t si = 0; si < plan.sizes.size(); ++si)
      for (int k = 0; k < plan.instances; ++k)
        j["instance_seeds"][family_name(plan.families[fi])][std::to_string(plan.sizes[si])]
            .push_back(instance_seed(plan, fi, si, k));
  return j;
}

void write_manifest(const ExperimentPlan& plan, const std::string& extra_key,
                    const nlohmann::json& extra) {
  if (plan.out_dir.empty()) return;
  fs::create_directories(plan.out_dir);
  nlohmann::json j = plan_manifest(plan);
  if (!extra_key.empty()) j[extra_key] = extra;
  std::ofstream out(fs::path(plan.out_dir) / "manifest.json");
  out << j.dump(2) << "\n";
}

}  // namespace

std::vector<CellResult> run_table(const ExperimentPlan& plan) {
  if (plan.families.empty() || plan.schemes.empty() || plan.sizes.empty() || plan.instances < 1)
    throw std::invalid_argument("run_table: incomplete plan");
  const int n = plan.sizes.front();

  // all instances of one family share the graph corpus across schemes
  std::vector<std::vector<InstanceValues>> results(plan.families.size());
  for (auto& r : results) r.resize(plan.instances);

  const int total = static_cast<int>(plan.families.size()) * plan.instances;
#pragma omp parallel for schedule(dynamic)
  for (int task = 0; task < total; ++task) {
    const size_t fi = static_cast<size_t>(task) / plan.instances;
    const int k = task % plan.instances;
    try {
      results[fi][k] = evaluate_instance(plan, plan.families[fi], n,
                                         instance_seed(plan, fi, 0, k));
    } catch (const std::exception& ex) {
#pragma omp critical
      std::cerr << "warning: instance " << family_name(plan.families[fi]) << "/" << k
                << " failed: " << ex.what() << "\n";
    }
  }

  std::vector<CellResult> cells;
  for (size_t fi = 0; fi < plan.families.size(); ++fi) {
    for (size_t si = 0; si < plan.schemes.size(); ++si) {
      CellResult cell;
      cell.family = plan.families[fi];
      cell.n = n;
      cell.scheme = plan.schemes[si];
      std::vector<double> rc, cmax, sim_rc, bounds;
      for (int k = 0; k < plan.instances; ++k) {
        const InstanceValues& iv = results[fi][k];
        if (!iv.ok) {
          ++cell.instances_failed;
          continue;
        }
        ++cell.instances_ok;
        rc.push_back(iv.rc[si]);
        cmax.push_back(iv.cmax[si]);
        sim_rc.push_back(iv.sim_rc[si]);
        bounds.push_back(iv.bound);
      }
      if (cell.instances_failed > plan.instances / 2) {
        std::cerr << "warning: cell " << family_name(cell.family) << "/"
                  << combo_name(cell.scheme) << " failed (" << cell.instances_failed << "/"
                  << plan.instances << " instances)\n";
        cell.rc_mean = cell.cmax_mean = std::nan("");
      } else {
        auto r = mean_sd(rc);
        auto c = mean_sd(cmax);
        auto s = mean_sd(sim_rc);
        cell.rc_mean = r.mean;
        cell.rc_sd = r.sd;
        cell.cmax_mean = c.mean;
        cell.cmax_sd = c.sd;
        cell.sim_rc_mean = s.mean;
        cell.sim_rc_sd = s.sd;
        cell.bound_mean = mean_sd(bounds).mean;
      }
      cells.push_back(cell);
    }
  }

  if (!plan.out_dir.empty()) {
    fs::create_directories(plan.out_dir);
    std::ofstream out(fs::path(plan.out_dir) / "table.csv");
    out << "family,n,alloc,routing,instances_ok,rc_mean,rc_sd,cmax_mean,cmax_sd,"
           "sim_rc_mean,sim_rc_sd,bound_mean\n";
    for (const CellResult& c : cells)
      out << family_name(c.family) << "," << c.n << "," << alloc_name(c.scheme.alloc) << ","
          << routing_name(c.scheme.routing) << "," << c.instances_ok << "," << c.rc_mean << ","
          << c.rc_sd << "," << c.cmax_mean << "," << c.cmax_sd << "," << c.sim_rc_mean << ","
          << c.sim_rc_sd << "," << c.bound_mean << "\n";
    write_manifest(plan, "kind", "table");
  }
  return cells;
}

void fit_loglog(ScalingFit& fit) {
  std::vector<std::pair<double, double>> pts;
  for (const SizePoint& p : fit.points)
    if (p.mean > 0.0) pts.push_back({std::log(static_cast<double>(p.n)), std::log(p.mean)});
  if (pts.size() < 2) throw std::runtime_error("fit_loglog: degenerate fit for " + fit.quantity);
  double mx = 0.0, my = 0.0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= pts.size();
  my /= pts.size();
  double sxx = 0.0, sxy = 0.0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  fit.exponent = sxy / sxx;
  double intercept = my - fit.exponent * mx;
  double ss = 0.0;
  for (auto [x, y] : pts) {
    double r = y - (intercept + fit.exponent * x);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / pts.size());
}

std::vector<ScalingFit> run_scaling(const ExperimentPlan& plan) {
  if (plan.sizes.size() < 2) throw std::invalid_argument("run_scaling: need several sizes");
  if (!std::is_sorted(plan.sizes.begin(), plan.sizes.end()))
    throw std::invalid_argument("run_scaling: sizes must ascend");

  struct SizeAgg {
    std::vector<InstanceValues> inst;
  };
  std::vector<std::vector<SizeAgg>> agg(plan.families.size());
  for (auto& a : agg) a.resize(plan.sizes.size());
  for (auto& a : agg)
    for (auto& s : a) s.inst.resize(plan.instances);

  const int total =
      static_cast<int>(plan.families.size() * plan.sizes.size()) * plan.instances;
#pragma omp parallel for schedule(dynamic)
  for (int task = 0; task < total; ++task) {
    int rest = task;
    const int k = rest % plan.instances;
    rest /= plan.instances;
    const size_t si = static_cast<size_t>(rest) % plan.sizes.size();
    const size_t fi = static_cast<size_t>(rest) / plan.sizes.size();
    try {
      agg[fi][si].inst[k] = evaluate_instance(plan, plan.families[fi], plan.sizes[si],
                                              instance_seed(plan, fi, si, k));
    } catch (const std::exception& ex) {
#pragma omp critical
      std::cerr << "warning: scaling instance failed: " << ex.what() << "\n";
    }
  }

  auto collect = [&](size_t fi, const std::string& quantity,
                     auto&& getter) {
    ScalingFit fit;
    fit.family = plan.families[fi];
    fit.quantity = quantity;
    for (size_t si = 0; si < plan.sizes.size(); ++si) {
      std::vector<double> xs;
      for (const InstanceValues& iv : agg[fi][si].inst)
        if (iv.ok) xs.push_back(getter(iv));
      auto ms = mean_sd(xs);
      fit.points.push_back({plan.sizes[si], ms.mean, ms.sd});
    }
    fit_loglog(fit);
    return fit;
  };

  std::vector<ScalingFit> fits;
  bool need_efr = false;
  for (const auto& s : plan.schemes)
    if (s.routing == RoutingKind::EFR) need_efr = true;
  for (size_t fi = 0; fi < plan.families.size(); ++fi) {
    fits.push_back(collect(fi, "b_max", [](const InstanceValues& iv) { return iv.b_max; }));
    if (need_efr)
      fits.push_back(
          collect(fi, "b_efr_max", [](const InstanceValues& iv) { return iv.b_efr_max; }));
    for (size_t si = 0; si < plan.schemes.size(); ++si) {
      fits.push_back(collect(fi, "rc_" + combo_name(plan.schemes[si]),
                             [si](const InstanceValues& iv) { return iv.rc[si]; }));
      fits.push_back(collect(fi, "cmax_" + combo_name(plan.schemes[si]),
                             [si](const InstanceValues& iv) { return iv.cmax[si]; }));
    }
  }

  if (!plan.out_dir.empty()) {
    fs::create_directories(plan.out_dir);
    std::ofstream sc(fs::path(plan.out_dir) / "scaling.csv");
    sc << "family,quantity,n,mean,sd\n";
    for (const ScalingFit& f : fits)
      for (const SizePoint& p : f.points)
        sc << family_name(f.family) << "," << f.quantity << "," << p.n << "," << p.mean << ","
           << p.sd << "\n";
    std::ofstream fc(fs::path(plan.out_dir) / "fits.csv");
    fc << "family,quantity,exponent,residual\n";
    for (const ScalingFit& f : fits)
      fc << family_name(f.family) << "," << f.quantity << "," << f.exponent << "," << f.residual
         << "\n";
    write_manifest(plan, "kind", "scaling");
  }
  return fits;
}

std::vector<DesignPoint> achievable_sketch(const Network& net, const PoolConfig& pool_cfg) {
  std::vector<DesignPoint> pts;
  const std::pair<RoutingKind, AllocScheme> combos[] = {
      {RoutingKind::SPR, AllocScheme::UC},
      {RoutingKind::EFR, AllocScheme::UC},
      {RoutingKind::SPR, AllocScheme::BC},
      {RoutingKind::EFR, AllocScheme::EBC},
  };
  for (auto [routing, scheme] : combos) {
    DesignProvenance prov;
    prov.topology = "sketch";
    pts.push_back(design_point(net, routing, scheme, prov));
  }

  // point C: uniform bandwidth plus the min-max path set
  PathPool pool = build_pool(net, pool_cfg);
  PathSet best = greedy_minmax(net, pool, spr_path_set(net));
  const double pairs =
      static_cast<double>(net.node_count()) * (net.node_count() - 1);
  DesignPoint c;
  c.c_max = 1.0;
  c.r_c = 2.0 * pairs / best.max_occurrence(net);
  c.provenance.topology = "greedy-c";
  c.bound = theorem_bound(net);
  c.n = net.node_count();
  c.m = net.edge_count();
  pts.push_back(c);

  pts.push_back(point_a(net));
  pts.push_back(point_b(net));
  return pts;
}

void emit_achievable_sketch(const Network& net, const std::string& csv_path,
                            const PoolConfig& pool_cfg) {
  write_design_points_csv(achievable_sketch(net, pool_cfg), csv_path);
}

}  // namespace netdesign
