// gresham: command-line front end for the currency-flow library.
//
// Exit codes: 0 success, 1 domain error, 2 usage or malformed input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gresham/bimetallic.hpp"
#include "gresham/drift.hpp"
#include "gresham/io.hpp"
#include "gresham/montecarlo.hpp"
#include "gresham/multicurrency.hpp"
#include "gresham/network.hpp"
#include "gresham/topology.hpp"

namespace {

using gresham::io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return fmt::format("{:.6g}", v); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string two_column(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += fmt::format("{:<{}}  {}\n", k, width, v);
  return out;
}

struct Common {
  std::string format;
  std::string out;
  double friction = 0.0;
};

gresham::FrictionSpec friction_of(const Common& c) { return gresham::FrictionSpec(c.friction); }

// ---------------------------------------------------------------- bimetal

struct BimetalArgs {
  Common common{"json"};
  double q1 = 0, q2 = 0, e1 = 0, e2 = 0, r = 0, rc = 0;
  std::optional<double> price1;
};

void run_bimetal(const BimetalArgs& a) {
  const gresham::DemandSpec d1(a.q1, a.e1);
  const gresham::DemandSpec d2(a.q2, a.e2);
  const gresham::RatioPair ratio(a.r, a.rc);
  const auto res = gresham::flow_from_ratios(d1, d2, ratio, friction_of(a.common), a.price1);
  if (a.common.format == "table") {
    write_text(two_column({{"dQ1", num(res.dQ1)}, {"dQ2", num(res.dQ2)}, {"dM1", num(res.dM1)}}),
               a.common.out);
  } else {
    write_text(dump(gresham::io::to_json(res)), a.common.out);
  }
}

// ---------------------------------------------------------------- evolve

struct EvolveArgs {
  Common common{"csv"};
  double q0 = 0, e1 = 0, r = 0, rc = 0, tau = 1.0, t = 1.0, dt = 0.01;
};

void run_evolve(const EvolveArgs& a) {
  const gresham::RatioPair ratio(a.r, a.rc);
  if (!(a.q0 > 0.0)) throw std::invalid_argument("initial quantity must be positive");
  if (!(a.e1 < 0.0)) throw std::invalid_argument("elasticity must be negative");
  const gresham::TimeEvolutionSpec spec(a.tau, a.t, a.dt);
  const auto traj = gresham::evolve_numeric(a.q0, a.e1, ratio, spec);
  const double closed = gresham::evolve_closed_form(a.q0, a.e1, ratio, spec);

  if (a.common.format == "csv") {
    write_text(gresham::io::trajectory_csv(traj), a.common.out);
  } else if (a.common.format == "json") {
    json pts = json::array();
    for (const auto& p : traj) pts.push_back({{"t", p.t}, {"Q", p.q}});
    write_text(dump({{"trajectory", pts}, {"closed_form", closed}}), a.common.out);
  } else {
    write_text(two_column({{"steps", std::to_string(traj.size() - 1)},
                           {"Q(t) numeric", num(traj.back().q)},
                           {"Q(t) closed form", num(closed)}}),
               a.common.out);
  }
}

// ---------------------------------------------------------------- drift

struct DriftArgs {
  Common common{"json"};
  double q1 = 0, e1 = 0, dp = 0;
};

void run_drift(const DriftArgs& a) {
  const auto c = gresham::gresham_to_drift(gresham::DemandSpec(a.q1, a.e1), a.dp);
  if (a.common.format == "table") {
    write_text(two_column({{"qn <-> Q", num(c.qn)},
                           {"mu <-> |E_d|", num(c.mu)},
                           {"dV <-> dP", num(c.dV)},
                           {"J", num(c.current)}}),
               a.common.out);
  } else {
    write_text(dump(gresham::io::to_json(c)), a.common.out);
  }
}

// ---------------------------------------------------------------- multicur

struct MulticurArgs {
  Common common{"json"};
  std::string input;
  double overvalue = 0.1;
  double weight12 = 1.0;
  double q1 = 100.0, e1 = -2.0;
};

void run_multicur(const MulticurArgs& a) {
  const gresham::DemandSpec demand(a.q1, a.e1);
  std::vector<gresham::CurrencyFlow> flows;
  if (a.input.empty()) {
    flows = gresham::five_currency_scenario(a.overvalue, demand, a.weight12, friction_of(a.common))
                .flows_into_b;
  } else {
    const auto world = gresham::io::world_from_json(read_json_file(a.input));
    if (world.size() != 2) throw gresham::io::ConfigError("multicur input needs exactly 2 countries");
    flows = gresham::pairwise_currency_flows(world[0], world[1], demand, std::nullopt,
                                             friction_of(a.common));
  }

  if (a.common.format == "table") {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& cf : flows) {
      rows.emplace_back(fmt::format("currency {}", cf.currency.label()),
                        fmt::format("{:<6} {}", gresham::to_string(cf.direction), num(cf.net)));
    }
    write_text(two_column(rows), a.common.out);
  } else {
    write_text(dump(gresham::io::to_json(std::span<const gresham::CurrencyFlow>(flows))),
               a.common.out);
  }
}

// ---------------------------------------------------------------- topo / flows

struct GraphArgs {
  std::string kind = "complete";
  std::size_t m = 10;
  std::optional<double> p;
  std::optional<double> mean_degree;
  std::uint64_t seed = 0;
  bool match_mean_degree = false;
};

gresham::ExperimentSpec graph_experiment(const GraphArgs& g, std::size_t n,
                                         const gresham::ValueDistribution& values) {
  gresham::io::SimulationConfig cfg;
  cfg.m = g.m;
  cfg.n = n;
  cfg.trials = 1;
  cfg.master_seed = g.seed;
  cfg.values = values;
  gresham::io::TopologyEntry entry{gresham::topology_kind_from_string(g.kind), g.p, g.mean_degree};
  return gresham::io::make_experiment(cfg, entry, g.match_mean_degree);
}

struct TopoArgs {
  Common common{"json"};
  GraphArgs graph;
};

void run_topo(const TopoArgs& a) {
  auto spec = graph_experiment(a.graph, 2, {});
  spec.topology.seed = a.graph.seed;
  const auto g = gresham::generate(spec.topology);
  if (a.common.format == "dot") {
    write_text(gresham::io::to_dot(g), a.common.out);
  } else if (a.common.format == "table") {
    write_text(two_column({{"kind", gresham::to_string(spec.topology.kind)},
                           {"nodes", std::to_string(g.node_count)},
                           {"edges", std::to_string(g.edges.size())},
                           {"mean degree", num(gresham::mean_degree(g))}}),
               a.common.out);
  } else {
    write_text(dump(gresham::io::to_json(g)), a.common.out);
  }
}

struct FlowsArgs {
  Common common{"json"};
  std::string input;
  GraphArgs graph;
  std::size_t n = 5;
  double lo = 1.0, hi = 10.0;
  std::string distribution = "banded";
  double q1 = 100.0, e1 = -2.0;
  std::string policy = "lowest";
};

void run_flows(const FlowsArgs& a) {
  const gresham::DemandSpec demand(a.q1, a.e1);
  const auto policy = gresham::counter_policy_from_string(a.policy);

  std::optional<gresham::CountryGraph> g;
  if (!a.input.empty()) {
    const json doc = read_json_file(a.input);
    auto world = gresham::io::world_from_json(doc);
    if (world.empty()) throw gresham::io::ConfigError("'countries' must not be empty");
    gresham::EdgeList edges;
    if (doc.contains("edges")) {
      edges = gresham::io::edge_list_from_json({{"m", world.size()}, {"edges", doc["edges"]}});
    } else {
      edges = world.size() >= 2 ? gresham::complete_graph(world.size())
                                : gresham::EdgeList{world.size(), {}};
    }
    g.emplace(std::move(edges), std::move(world));
  } else {
    gresham::ValueDistribution values{gresham::value_distribution_from_string(a.distribution), a.lo,
                                      a.hi};
    g.emplace(gresham::build_trial_world(graph_experiment(a.graph, a.n, values), 0));
  }

  const auto fs = gresham::compute_all_flows(*g, demand, friction_of(a.common), policy);
  if (a.common.format == "dot") {
    write_text(gresham::io::to_dot(*g, fs), a.common.out);
  } else if (a.common.format == "table") {
    std::string out = "source  target  currency  counter  magnitude\n";
    for (const auto& f : fs.flows) {
      out += fmt::format("{:<6}  {:<6}  {:<8}  {:<7}  {}\n", f.source, f.target, f.currency.label(),
                         f.counter.label(), num(f.magnitude));
    }
    std::string red;
    for (auto v : fs.red_nodes) red += (red.empty() ? "" : " ") + std::to_string(v);
    out += "red nodes: " + (red.empty() ? std::string("none") : red) + "\n";
    write_text(out, a.common.out);
  } else {
    json out = gresham::io::to_json(fs);
    out["world"] = gresham::io::world_to_json(g->schedules())["countries"];
    out["edges"] = gresham::io::to_json(g->topology())["edges"];
    write_text(dump(out), a.common.out);
  }
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  Common common{"table"};
  std::string input;
  std::string trials_csv;
  std::string emit_dot;
  bool match_mean_degree = false;
  unsigned threads = 0;
  std::optional<std::uint64_t> seed;
  std::string policy;
};

std::string dot_path_for(const std::string& base, gresham::TopologyKind kind, bool several) {
  if (!several) return base;
  const std::filesystem::path p(base);
  auto name = p.stem().string() + "_" + gresham::to_string(kind) + p.extension().string();
  return (p.parent_path() / name).string();
}

void run_simulate(const SimulateArgs& a) {
  auto cfg = gresham::io::parse_simulation_config(read_json_file(a.input));
  if (a.seed) cfg.master_seed = *a.seed;
  if (!a.policy.empty()) cfg.policy = gresham::counter_policy_from_string(a.policy);

  std::vector<gresham::ExperimentSpec> specs;
  std::vector<gresham::TrialStats> results;
  for (const auto& entry : cfg.topologies) {
    auto spec = gresham::io::make_experiment(cfg, entry, a.match_mean_degree);
    spec.friction = friction_of(a.common);
    results.push_back(gresham::run_experiment(spec, a.threads));
    specs.push_back(spec);
  }

  if (!a.trials_csv.empty()) {
    std::string csv = gresham::io::trials_csv_header();
    for (std::size_t k = 0; k < specs.size(); ++k) {
      csv += gresham::io::trials_csv_rows(specs[k], results[k]);
    }
    write_text(csv, a.trials_csv);
  }

  if (!a.emit_dot.empty()) {
    for (const auto& spec : specs) {
      const auto g = gresham::build_trial_world(spec, spec.trials - 1);
      const auto fs = gresham::compute_all_flows(g, spec.demand, spec.friction, spec.policy);
      write_text(gresham::io::to_dot(g, fs),
                 dot_path_for(a.emit_dot, spec.topology.kind, specs.size() > 1));
    }
  }

  const bool degenerate = cfg.trials == 1;
  if (a.common.format == "json") {
    json arr = json::array();
    for (std::size_t k = 0; k < specs.size(); ++k) {
      arr.push_back(gresham::io::experiment_to_json(specs[k], results[k]));
    }
    json out = {{"results", arr}};
    if (degenerate) out["warning"] = "degenerate sample: single trial, std reported as 0";
    write_text(dump(out), a.common.out);
  } else if (a.common.format == "csv") {
    std::string csv = "topology,mean,std,secondary_mean,secondary_std\n";
    for (std::size_t k = 0; k < specs.size(); ++k) {
      csv += fmt::format("{},{},{},{},{}\n", gresham::to_string(specs[k].topology.kind),
                         results[k].mean, results[k].std_dev, results[k].secondary_mean,
                         results[k].secondary_std_dev);
    }
    write_text(csv, a.common.out);
  } else {
    std::string out = fmt::format("red nodes per trial (m={}, n={}, trials={}, seed={})\n", cfg.m,
                                  cfg.n, cfg.trials, cfg.master_seed);
    std::string header = fmt::format("{:<16}", "");
    std::string mean_row = fmt::format("{:<16}", "Mean");
    std::string std_row = fmt::format("{:<16}", "Std. Dev.");
    std::string sec_row = fmt::format("{:<16}", "Local-max mean");
    for (std::size_t k = 0; k < specs.size(); ++k) {
      header += fmt::format("{:>12}", gresham::to_string(specs[k].topology.kind));
      mean_row += fmt::format("{:>12}", num(results[k].mean));
      std_row += fmt::format("{:>12}", num(results[k].std_dev));
      sec_row += fmt::format("{:>12}", num(results[k].secondary_mean));
    }
    out += header + "\n" + mean_row + "\n" + std_row + "\n" + sec_row + "\n";
    if (degenerate) out += "warning: degenerate sample (1 trial); std reported as 0\n";
    write_text(out, a.common.out);
  }
}

// ---------------------------------------------------------------- wiring

void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  sub->add_option("--friction", c.friction, "Dead band on relative overvaluation, in [0, 1)");
}

void add_graph(CLI::App* sub, GraphArgs& g) {
  sub->add_option("--kind", g.kind, "complete | random | scale_free")
      ->check(CLI::IsMember({"complete", "random", "scale_free"}));
  sub->add_option("--m", g.m, "Number of countries");
  sub->add_option("--p", g.p, "Edge probability (random)");
  sub->add_option("--mean-degree", g.mean_degree, "Target mean degree (scale_free, or random with --match-mean-degree)");
  sub->add_option("--seed", g.seed, "Generator seed");
  sub->add_flag("--match-mean-degree", g.match_mean_degree, "Random graphs use p = mean_degree/(m-1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Currency flows under mispriced commodity money"};
  app.require_subcommand(1);

  BimetalArgs bimetal;
  auto* sub_bimetal = app.add_subcommand("bimetal", "Two currencies, two countries");
  sub_bimetal->add_option("--q1", bimetal.q1, "Quantity demanded, currency 1")->required();
  sub_bimetal->add_option("--q2", bimetal.q2, "Quantity demanded, currency 2")->required();
  sub_bimetal->add_option("--e1", bimetal.e1, "Demand elasticity, currency 1")->required();
  sub_bimetal->add_option("--e2", bimetal.e2, "Demand elasticity, currency 2")->required();
  sub_bimetal->add_option("--r", bimetal.r, "Market ratio R")->required();
  sub_bimetal->add_option("--rc", bimetal.rc, "In-country ratio R_c")->required();
  sub_bimetal->add_option("--price1", bimetal.price1, "Face value of currency 1 for dM1");
  add_common(sub_bimetal, bimetal.common, {"json", "table"});

  EvolveArgs evolve;
  auto* sub_evolve = app.add_subcommand("evolve", "Quantity over time for one currency");
  sub_evolve->add_option("--q1,--q0", evolve.q0, "Initial quantity")->required();
  sub_evolve->add_option("--e1", evolve.e1, "Demand elasticity")->required();
  sub_evolve->add_option("--r", evolve.r, "Market ratio R")->required();
  sub_evolve->add_option("--rc", evolve.rc, "In-country ratio R_c")->required();
  sub_evolve->add_option("--tau", evolve.tau, "Time constant");
  sub_evolve->add_option("--t", evolve.t, "Horizon");
  sub_evolve->add_option("--dt", evolve.dt, "Integration step");
  add_common(sub_evolve, evolve.common, {"csv", "json", "table"});

  DriftArgs drift;
  auto* sub_drift = app.add_subcommand("drift", "Drift-current correspondence of a flow");
  sub_drift->add_option("--q1", drift.q1, "Quantity demanded")->required();
  sub_drift->add_option("--e1", drift.e1, "Demand elasticity")->required();
  sub_drift->add_option("--dp", drift.dp, "Price differential")->required();
  add_common(sub_drift, drift.common, {"json", "table"});

  MulticurArgs multicur;
  auto* sub_multicur = app.add_subcommand("multicur", "Two countries, many currencies");
  sub_multicur->add_option("--input", multicur.input, "World JSON with two countries (market, country)");
  sub_multicur->add_option("--overvalue", multicur.overvalue, "Five-currency scenario: B's markup on currency 2");
  sub_multicur->add_option("--weight12", multicur.weight12, "Five-currency scenario: demand weight of the 1-vs-2 pair");
  sub_multicur->add_option("--q1", multicur.q1, "Quantity demanded per pair");
  sub_multicur->add_option("--e1", multicur.e1, "Demand elasticity per pair");
  add_common(sub_multicur, multicur.common, {"json", "table"});

  FlowsArgs flows;
  auto* sub_flows = app.add_subcommand("flows", "Resolve flows on a country graph");
  sub_flows->add_option("--input", flows.input, "World JSON {\"countries\": [...], \"edges\"?: [...]}");
  add_graph(sub_flows, flows.graph);
  sub_flows->add_option("--n", flows.n, "Currencies (generated worlds)");
  sub_flows->add_option("--lo", flows.lo, "Lower bound of face values");
  sub_flows->add_option("--hi", flows.hi, "Upper bound of face values");
  sub_flows->add_option("--distribution", flows.distribution, "banded | sorted")
      ->check(CLI::IsMember({"banded", "sorted"}));
  sub_flows->add_option("--q1", flows.q1, "Quantity demanded");
  sub_flows->add_option("--e1", flows.e1, "Demand elasticity");
  sub_flows->add_option("--counter-policy", flows.policy, "lowest | any")
      ->check(CLI::IsMember({"lowest", "any"}));
  add_common(sub_flows, flows.common, {"json", "dot", "table"});

  TopoArgs topo;
  auto* sub_topo = app.add_subcommand("topo", "Generate a topology");
  add_graph(sub_topo, topo.graph);
  add_common(sub_topo, topo.common, {"json", "dot", "table"});

  SimulateArgs sim;
  auto* sub_sim = app.add_subcommand("simulate", "Monte Carlo red-node experiment");
  sub_sim->add_option("--input", sim.input, "Experiment config JSON")->required();
  sub_sim->add_option("--trials-csv", sim.trials_csv, "Write one CSV row per trial");
  sub_sim->add_option("--emit-dot", sim.emit_dot, "Write the final trial's flows as DOT");
  sub_sim->add_flag("--match-mean-degree", sim.match_mean_degree, "Random graphs use p = mean_degree/(m-1)");
  sub_sim->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");
  sub_sim->add_option("--seed", sim.seed, "Override master_seed");
  sub_sim->add_option("--counter-policy", sim.policy, "lowest | any")
      ->check(CLI::IsMember({"lowest", "any"}));
  add_common(sub_sim, sim.common, {"table", "json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*sub_bimetal) run_bimetal(bimetal);
    if (*sub_evolve) run_evolve(evolve);
    if (*sub_drift) run_drift(drift);
    if (*sub_multicur) run_multicur(multicur);
    if (*sub_flows) run_flows(flows);
    if (*sub_topo) run_topo(topo);
    if (*sub_sim) run_simulate(sim);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gresham::io::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout.flush();
  return 0;
}
