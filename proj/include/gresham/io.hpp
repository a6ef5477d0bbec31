#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gresham/bimetallic.hpp"
#include "gresham/drift.hpp"
#include "gresham/montecarlo.hpp"
#include "gresham/multicurrency.hpp"
#include "gresham/network.hpp"
#include "gresham/topology.hpp"

namespace gresham::io {

using nlohmann::json;

/// Malformed input document (wrong shape, missing or mistyped fields).
/// Domain violations inside well-formed input raise std::invalid_argument.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const PriceSchedule& s);
PriceSchedule schedule_from_json(const json& j);

/// {"countries": [[...], ...]}
json world_to_json(std::span<const PriceSchedule> world);
std::vector<PriceSchedule> world_from_json(const json& j);

/// {"dQ1": ..., "dQ2": ..., "dM1": ...}
json to_json(const FlowResult& r);

/// Header `t,Q`, one row per point, full precision.
std::string trajectory_csv(std::span<const TrajectoryPoint> traj);

/// {"qn": ..., "mu": ..., "dV": ..., "J": ...}
json to_json(const DriftCorrespondence& c);

/// {"currencies": [{"currency": 1, "direction": "in", "net": ..., "components": [...]}]}
json to_json(std::span<const CurrencyFlow> flows);

/// {"m": ..., "edges": [[a, b], ...]}
json to_json(const EdgeList& g);
EdgeList edge_list_from_json(const json& j);

/// Currencies are written with 1-based labels.
json to_json(const FlowSet& fs);

std::string to_dot(const EdgeList& g);

/// Red nodes carry `fillcolor=red, style=filled`; each flow becomes an edge
/// line `source -- target [label="j->l (magnitude)"]` with 1-based currency
/// labels. Graph edges without flows are written bare.
std::string to_dot(const CountryGraph& g, const FlowSet& fs);

struct TopologyEntry {
  TopologyKind kind = TopologyKind::kComplete;
  std::optional<double> p;
  std::optional<double> mean_degree;
};

struct SimulationConfig {
  std::size_t m = 10;
  std::size_t n = 5;
  std::size_t trials = 1000;
  std::uint64_t master_seed = 0;
  ValueDistribution values;
  CounterPolicy policy = CounterPolicy::kLowest;
  std::vector<TopologyEntry> topologies;
};

/// Throws ConfigError on malformed documents.
SimulationConfig parse_simulation_config(const json& j);

/// Resolved experiment for one configured topology. Random graphs use
/// p = mean_degree / (m-1) when `match_mean_degree` is set, else the given p,
/// else mean_degree / (m-1) if a mean degree is given, else 0.48. The
/// default mean degree is 4.8.
ExperimentSpec make_experiment(const SimulationConfig& cfg, const TopologyEntry& entry,
                               bool match_mean_degree);

/// {"topology", "mean", "std", "secondary_mean", "secondary_std", "params", ...}
json experiment_to_json(const ExperimentSpec& spec, const TrialStats& stats);

/// Header `topology,trial,red_nodes,neighborhood_maxima`.
std::string trials_csv_header();
std::string trials_csv_rows(const ExperimentSpec& spec, const TrialStats& stats);

}  // namespace gresham::io
