#include "gresham/io.hpp"

#include <map>
#include <set>
#include <utility>

#include <fmt/format.h>

namespace gresham::io {

namespace {

constexpr double kDefaultP = 0.48;
constexpr double kDefaultMeanDegree = 4.8;

double number_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number()) {
    throw ConfigError(fmt::format("field '{}' must be a number", key));
  }
  return it->get<double>();
}

std::uint64_t unsigned_field(const json& j, const char* key) {
  const auto it = j.find(key);
  // Non-negative integer literals parse as unsigned; negatives and floats don't.
  if (it == j.end() || !it->is_number_unsigned()) {
    throw ConfigError(fmt::format("field '{}' must be a non-negative integer", key));
  }
  return it->get<std::uint64_t>();
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(fmt::format("unknown field '{}' in {}", key, where));
  }
}

}  // namespace

json to_json(const PriceSchedule& s) {
  return json(std::vector<double>(s.values().begin(), s.values().end()));
}

PriceSchedule schedule_from_json(const json& j) {
  if (!j.is_array()) throw ConfigError("price schedule must be an array of numbers");
  std::vector<double> values;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError("price schedule must be an array of numbers");
    values.push_back(v.get<double>());
  }
  return PriceSchedule(std::move(values));
}

json world_to_json(std::span<const PriceSchedule> world) {
  json countries = json::array();
  for (const auto& s : world) countries.push_back(to_json(s));
  return {{"countries", countries}};
}

std::vector<PriceSchedule> world_from_json(const json& j) {
  if (!j.is_object() || !j.contains("countries") || !j["countries"].is_array()) {
    throw ConfigError("world must be an object with a 'countries' array");
  }
  std::vector<PriceSchedule> out;
  for (const auto& s : j["countries"]) out.push_back(schedule_from_json(s));
  return out;
}

json to_json(const FlowResult& r) { return {{"dQ1", r.dQ1}, {"dQ2", r.dQ2}, {"dM1", r.dM1}}; }

std::string trajectory_csv(std::span<const TrajectoryPoint> traj) {
  std::string out = "t,Q\n";
  for (const auto& p : traj) out += fmt::format("{},{}\n", p.t, p.q);
  return out;
}

json to_json(const DriftCorrespondence& c) {
  return {{"qn", c.qn}, {"mu", c.mu}, {"dV", c.dV}, {"J", c.current}};
}

json to_json(std::span<const CurrencyFlow> flows) {
  json arr = json::array();
  for (const auto& cf : flows) {
    json comps = json::array();
    for (const auto& c : cf.components) {
      comps.push_back({{"counter", c.counter.label()}, {"flow", c.flow}});
    }
    arr.push_back({{"currency", cf.currency.label()},
                   {"direction", to_string(cf.direction)},
                   {"net", cf.net},
                   {"components", comps}});
  }
  return {{"currencies", arr}};
}

json to_json(const EdgeList& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({e.a, e.b});
  return {{"m", g.node_count}, {"edges", edges}};
}

EdgeList edge_list_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("edge list must be an object");
  EdgeList g{unsigned_field(j, "m"), {}};
  if (!j.contains("edges") || !j["edges"].is_array()) throw ConfigError("'edges' must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ConfigError("each edge must be a pair of node indices");
    }
    g.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
  }
  return g;
}

json to_json(const FlowSet& fs) {
  json flows = json::array();
  for (const auto& f : fs.flows) {
    flows.push_back({{"source", f.source},
                     {"target", f.target},
                     {"currency", f.currency.label()},
                     {"counter", f.counter.label()},
                     {"overvaluation", f.overvaluation},
                     {"magnitude", f.magnitude}});
  }
  return {{"flows", flows}, {"red_nodes", fs.red_nodes}};
}

std::string to_dot(const EdgeList& g) {
  std::string out = "graph G {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.node_count; ++v) out += fmt::format("  {};\n", v);
  for (const auto& e : g.edges) out += fmt::format("  {} -- {};\n", e.a, e.b);
  out += "}\n";
  return out;
}

std::string to_dot(const CountryGraph& g, const FlowSet& fs) {
  const std::set<std::size_t> red(fs.red_nodes.begin(), fs.red_nodes.end());
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const Flow*>> by_edge;
  for (const auto& f : fs.flows) {
    by_edge[{std::min(f.source, f.target), std::max(f.source, f.target)}].push_back(&f);
  }

  std::string out = "graph G {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (red.count(v)) {
      out += fmt::format("  {} [fillcolor=red, style=filled];\n", v);
    } else {
      out += fmt::format("  {};\n", v);
    }
  }
  for (const auto& e : g.edges()) {
    const auto it = by_edge.find({e.a, e.b});
    if (it == by_edge.end()) {
      out += fmt::format("  {} -- {};\n", e.a, e.b);
      continue;
    }
    for (const Flow* f : it->second) {
      out += fmt::format("  {} -- {} [label=\"{}->{} ({:.3g})\"];\n", f->source, f->target,
                         f->currency.label(), f->counter.label(), f->magnitude);
    }
  }
  out += "}\n";
  return out;
}

SimulationConfig parse_simulation_config(const json& j) {
  if (!j.is_object()) throw ConfigError("simulation config must be a JSON object");
  reject_unknown_keys(j, {"m", "n", "trials", "master_seed", "value_distribution", "topologies",
                          "counter_policy"},
                      "simulation config");

  SimulationConfig cfg;
  cfg.m = unsigned_field(j, "m");
  cfg.n = unsigned_field(j, "n");
  cfg.trials = unsigned_field(j, "trials");
  if (j.contains("master_seed")) cfg.master_seed = unsigned_field(j, "master_seed");

  if (j.contains("value_distribution")) {
    const auto& vd = j["value_distribution"];
    if (!vd.is_object()) throw ConfigError("'value_distribution' must be an object");
    reject_unknown_keys(vd, {"kind", "lo", "hi"}, "value_distribution");
    if (vd.contains("lo")) cfg.values.lo = number_field(vd, "lo");
    if (vd.contains("hi")) cfg.values.hi = number_field(vd, "hi");
    if (vd.contains("kind")) {
      if (!vd["kind"].is_string()) throw ConfigError("'kind' must be a string");
      try {
        cfg.values.kind = value_distribution_from_string(vd["kind"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  }

  if (j.contains("counter_policy")) {
    if (!j["counter_policy"].is_string()) throw ConfigError("'counter_policy' must be a string");
    try {
      cfg.policy = counter_policy_from_string(j["counter_policy"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }

  if (!j.contains("topologies") || !j["topologies"].is_array() || j["topologies"].empty()) {
    throw ConfigError("'topologies' must be a non-empty array");
  }
  for (const auto& t : j["topologies"]) {
    if (!t.is_object() || !t.contains("kind") || !t["kind"].is_string()) {
      throw ConfigError("each topology needs a string 'kind'");
    }
    reject_unknown_keys(t, {"kind", "p", "mean_degree"}, "topology");
    TopologyEntry entry;
    try {
      entry.kind = topology_kind_from_string(t["kind"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (t.contains("p")) entry.p = number_field(t, "p");
    if (t.contains("mean_degree")) entry.mean_degree = number_field(t, "mean_degree");
    cfg.topologies.push_back(entry);
  }
  return cfg;
}

ExperimentSpec make_experiment(const SimulationConfig& cfg, const TopologyEntry& entry,
                               bool match_mean_degree) {
  ExperimentSpec spec;
  spec.topology.kind = entry.kind;
  spec.topology.m = cfg.m;
  spec.n = cfg.n;
  spec.trials = cfg.trials;
  spec.master_seed = cfg.master_seed;
  spec.values = cfg.values;
  spec.policy = cfg.policy;

  const double k = entry.mean_degree.value_or(kDefaultMeanDegree);
  spec.topology.mean_degree = k;
  if (entry.kind == TopologyKind::kRandom) {
    if (cfg.m < 2) throw std::invalid_argument("random topology needs m >= 2");
    const double matched = k / static_cast<double>(cfg.m - 1);
    if (match_mean_degree) {
      spec.topology.p = matched;
    } else if (entry.p) {
      spec.topology.p = *entry.p;
    } else {
      spec.topology.p = entry.mean_degree ? matched : kDefaultP;
    }
  }
  return spec;
}

json experiment_to_json(const ExperimentSpec& spec, const TrialStats& stats) {
  json params = {
      {"m", spec.topology.m},
      {"n", spec.n},
      {"trials", spec.trials},
      {"master_seed", spec.master_seed},
      {"value_distribution",
       {{"kind", to_string(spec.values.kind)}, {"lo", spec.values.lo}, {"hi", spec.values.hi}}},
      {"counter_policy", to_string(spec.policy)},
      {"friction", spec.friction.threshold()},
      {"quantity", spec.demand.quantity()},
      {"elasticity", spec.demand.elasticity()},
  };
  const double m_minus_1 = static_cast<double>(spec.topology.m) - 1.0;
  switch (spec.topology.kind) {
    case TopologyKind::kComplete:
      params["expected_mean_degree"] = m_minus_1;
      break;
    case TopologyKind::kRandom:
      params["p"] = spec.topology.p;
      params["expected_mean_degree"] = spec.topology.p * m_minus_1;
      break;
    case TopologyKind::kScaleFree:
      params["mean_degree"] = spec.topology.mean_degree;
      params["expected_mean_degree"] = spec.topology.mean_degree;
      break;
  }
  json out = {{"topology", to_string(spec.topology.kind)},
              {"mean", stats.mean},
              {"std", stats.std_dev},
              {"secondary_mean", stats.secondary_mean},
              {"secondary_std", stats.secondary_std_dev},
              {"degenerate_sample", stats.degenerate_sample},
              {"params", params}};
  return out;
}

std::string trials_csv_header() { return "topology,trial,red_nodes,neighborhood_maxima\n"; }

std::string trials_csv_rows(const ExperimentSpec& spec, const TrialStats& stats) {
  std::string out;
  const std::string kind = to_string(spec.topology.kind);
  for (std::size_t t = 0; t < stats.per_trial_counts.size(); ++t) {
    out += fmt::format("{},{},{},{}\n", kind, t, stats.per_trial_counts[t],
                       stats.per_trial_secondary[t]);
  }
  return out;
}

}  // namespace gresham::io
