#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netdesign/experiment.hpp"
#include "netdesign/oracle.hpp"

namespace nd = netdesign;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string spec_comment(const nd::TopologySpec& spec) {
  std::ostringstream os;
  os << "family=" << nd::family_name(spec.family) << " n=" << spec.n;
  switch (spec.family) {
    case nd::Family::BA: os << " m=" << spec.ba_m; break;
    case nd::Family::ER: os << " edges=" << spec.er_edges; break;
    case nd::Family::WS: os << " k=" << spec.ws_k << " rewire=" << spec.ws_rewire; break;
    default: break;
  }
  os << " seed=" << spec.seed;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  nd::apply_thread_env();
  CLI::App app{"network design toolkit: topology generation, routing analysis, "
               "bandwidth allocation and packet-level simulation"};
  app.require_subcommand(1);
  app.set_config("--config");

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "generate a topology and write its edge list");
  std::string gen_family = "ba", gen_out = "out.edges";
  nd::TopologySpec spec;
  gen->add_option("--family", gen_family, "ba|pa|hot|er|ws")->required();
  gen->add_option("--n", spec.n, "node count")->required();
  gen->add_option("--m", spec.ba_m, "BA: edges per new node");
  gen->add_option("--edges", spec.er_edges, "ER: target edge count");
  gen->add_option("--k", spec.ws_k, "WS: base ring degree");
  gen->add_option("--rewire", spec.ws_rewire, "WS: rewired edge fraction");
  gen->add_option("--seed", spec.seed, "generator seed");
  gen->add_option("--out", gen_out, "output edge-list path")->required();

  // --- table ---
  auto* table = app.add_subcommand("table", "evaluate scheme combinations over instance batches");
  std::string tab_families = "ba,pa,hot,er,ws";
  std::string tab_schemes = "uc-spr,uc-efr,bc-spr,ebc-efr";
  std::string tab_mode = "analytic", tab_out = "table_out";
  int tab_n = 1200, tab_instances = 10;
  std::uint64_t tab_seed = 1;
  table->add_option("--families", tab_families, "comma list of topology families");
  table->add_option("--n", tab_n, "network size");
  table->add_option("--instances", tab_instances, "instances per family");
  table->add_option("--schemes", tab_schemes, "comma list like uc-spr,ebc-efr");
  table->add_option("--mode", tab_mode, "analytic|simulated|both");
  table->add_option("--out", tab_out, "output directory");
  table->add_option("--seed", tab_seed, "master seed");

  // --- scaling ---
  auto* scaling = app.add_subcommand("scaling", "size sweep with log-log exponent fits");
  std::string sc_families = "ba,er", sc_sizes = "400,800,1600,3200";
  std::string sc_schemes = "uc-spr,uc-efr,bc-spr,ebc-efr", sc_out = "scaling_out";
  int sc_instances = 5;
  std::uint64_t sc_seed = 1;
  scaling->add_option("--family,--families", sc_families, "comma list of families");
  scaling->add_option("--sizes", sc_sizes, "comma list of ascending sizes");
  scaling->add_option("--instances", sc_instances, "instances per size");
  scaling->add_option("--schemes", sc_schemes, "comma list like uc-spr,ebc-efr");
  scaling->add_option("--out", sc_out, "output directory");
  scaling->add_option("--seed", sc_seed, "master seed");

  // --- simulate ---
  auto* sim = app.add_subcommand("simulate", "packet-level run or critical-rate search");
  std::string sim_graph, sim_scheme = "uc-spr", sim_out = "sim";
  long long sim_rate = 0;
  bool sim_find_rc = false;
  nd::SimulationConfig sim_cfg;
  nd::RcSweepConfig sweep_cfg;
  sim->add_option("--graph", sim_graph, "edge-list file")->required();
  sim->add_option("--scheme", sim_scheme, "alloc-routing combo, e.g. ebc-efr");
  sim->add_option("--rate", sim_rate, "injection rate R for a single run");
  sim->add_flag("--find-rc", sim_find_rc, "search the congestion onset instead");
  sim->add_option("--steps", sim_cfg.total_steps, "steps per run");
  sim->add_option("--transient", sim_cfg.transient_steps, "steps discarded before measuring");
  sim->add_option("--window", sim_cfg.window_steps, "measurement window length");
  sim->add_option("--seed", sim_cfg.seed, "simulation seed");
  sim->add_option("--eta-threshold", sweep_cfg.eta_threshold, "congestion threshold on eta");
  sim->add_option("--out", sim_out, "output prefix (<out>_trace.csv, <out>_summary.json)");

  // --- sketch ---
  auto* sketch = app.add_subcommand("sketch", "design-plane coordinates for one network");
  std::string sk_graph, sk_out = "sketch.csv";
  nd::PoolConfig pool_cfg;
  sketch->add_option("--graph", sk_graph, "edge-list file")->required();
  sketch->add_option("--out", sk_out, "output CSV");
  sketch->add_option("--yen-k", pool_cfg.yen_k, "k-shortest supplement per pair (0 disables)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      spec.family = nd::family_from_name(gen_family);
      nd::Network net = nd::generate(spec);
      net.save_edge_list(gen_out, spec_comment(spec));
      std::cout << "wrote " << gen_out << " (N=" << net.node_count()
                << ", M=" << net.edge_count() << ")\n";
    } else if (*table) {
      nd::ExperimentPlan plan;
      for (const auto& f : split_csv(tab_families)) plan.families.push_back(nd::family_from_name(f));
      for (const auto& s : split_csv(tab_schemes)) plan.schemes.push_back(nd::combo_from_name(s));
      plan.sizes = {tab_n};
      plan.instances = tab_instances;
      plan.master_seed = tab_seed;
      plan.out_dir = tab_out;
      plan.mode = tab_mode == "analytic"    ? nd::EvalMode::Analytic
                  : tab_mode == "simulated" ? nd::EvalMode::Simulated
                                            : nd::EvalMode::Both;
      auto cells = nd::run_table(plan);
      std::cout << "family scheme rc_mean cmax_mean" << (plan.mode != nd::EvalMode::Analytic ? " sim_rc_mean" : "") << "\n";
      for (const auto& c : cells) {
        std::cout << nd::family_name(c.family) << " " << nd::combo_name(c.scheme) << " "
                  << c.rc_mean << " " << c.cmax_mean;
        if (plan.mode != nd::EvalMode::Analytic) std::cout << " " << c.sim_rc_mean;
        std::cout << "\n";
      }
      std::cout << "wrote " << (fs::path(tab_out) / "table.csv").string() << "\n";
    } else if (*scaling) {
      nd::ExperimentPlan plan;
      for (const auto& f : split_csv(sc_families)) plan.families.push_back(nd::family_from_name(f));
      for (const auto& s : split_csv(sc_schemes)) plan.schemes.push_back(nd::combo_from_name(s));
      for (const auto& z : split_csv(sc_sizes)) plan.sizes.push_back(std::stoi(z));
      plan.instances = sc_instances;
      plan.master_seed = sc_seed;
      plan.out_dir = sc_out;
      auto fits = nd::run_scaling(plan);
      for (const auto& f : fits)
        std::cout << nd::family_name(f.family) << " " << f.quantity << " ~ N^" << f.exponent
                  << " (rms " << f.residual << ")\n";
      std::cout << "wrote " << (fs::path(sc_out) / "fits.csv").string() << "\n";
    } else if (*sim) {
      nd::Network net = nd::Network::load_edge_list(sim_graph);
      nd::SchemeCombo combo = nd::combo_from_name(sim_scheme);
      nd::RoutingModel model = combo.routing == nd::RoutingKind::EFR
                                   ? nd::RoutingModel::build_efr(net)
                                   : nd::RoutingModel::build_spr(net);
      const nd::EdgeCentrality gamma = nd::effective_betweenness(net, combo.routing);
      const nd::EdgeCentrality spr = combo.routing == nd::RoutingKind::SPR
                                         ? gamma
                                         : nd::edge_betweenness(net);
      const nd::EdgeCentrality* basis = nullptr;
      if (combo.alloc == nd::AllocScheme::BC) basis = &spr;
      if (combo.alloc == nd::AllocScheme::EBC) basis = &gamma;
      nd::BandwidthAllocation alloc = nd::allocate(net, basis, combo.alloc);
      if (sim_find_rc) {
        sweep_cfg.probe = sim_cfg;
        sweep_cfg.seed = sim_cfg.seed;
        nd::RcEstimate rc = nd::find_rc(net, model, alloc, sweep_cfg);
        double analytic = nd::analytic_rc(net, alloc, gamma);
        std::cout << "simulated R_c = " << rc.r_c << (rc.unsaturated ? " (unsaturated)" : "")
                  << " after " << rc.probes << " probes; analytic R_c = " << analytic << "\n";
      } else {
        if (sim_rate < 1) throw std::invalid_argument("--rate required without --find-rc");
        sim_cfg.injection_rate = sim_rate;
        nd::OrderParameterEstimate est = nd::simulate(net, model, alloc, sim_cfg);
        nd::write_theta_trace(est, sim_out + "_trace.csv");
        nd::write_run_summary(sim_cfg, est, sim_out + "_summary.json");
        std::cout << "eta = " << est.eta << " (injected " << est.injected << ", delivered "
                  << est.delivered << ")\n";
      }
    } else if (*sketch) {
      nd::Network net = nd::Network::load_edge_list(sk_graph);
      nd::emit_achievable_sketch(net, sk_out, pool_cfg);
      std::cout << "wrote " << sk_out << "\n";
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
