#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gresham/economy.hpp"
#include "gresham/topology.hpp"

namespace gresham {

/// Countries on an undirected graph, each with its own face-value schedule
/// over a shared set of n currencies.
class CountryGraph {
 public:
  /// Throws on self-loops, out-of-range endpoints, duplicate edges, a
  /// schedule count different from the node count, or schedules of unequal
  /// length.
  CountryGraph(EdgeList topology, std::vector<PriceSchedule> schedules);

  std::size_t node_count() const { return topology_.node_count; }
  std::size_t currency_count() const { return schedules_.front().size(); }
  const EdgeList& topology() const { return topology_; }
  const std::vector<Edge>& edges() const { return topology_.edges; }
  const PriceSchedule& schedule(std::size_t node) const { return schedules_.at(node); }
  const std::vector<PriceSchedule>& schedules() const { return schedules_; }

  /// Sorted ascending.
  std::span<const std::size_t> neighbors(std::size_t node) const { return adjacency_.at(node); }
  bool has_edge(std::size_t a, std::size_t b) const;
  bool is_complete() const;

 private:
  EdgeList topology_;
  std::vector<PriceSchedule> schedules_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Which counter currencies an overvaluation may be measured against.
/// kLowest compares every currency with the lowest-valued one (value 1
/// everywhere); kAny takes the best of all l != j.
enum class CounterPolicy { kLowest, kAny };

std::string to_string(CounterPolicy p);
CounterPolicy counter_policy_from_string(const std::string& s);

/// Currency `currency` moving from `source` to `target`, where it is
/// overvalued against `counter` relative to the source's own prices.
struct Flow {
  std::size_t source = 0;
  std::size_t target = 0;
  CurrencyId currency;
  CurrencyId counter;
  double overvaluation = 0.0;
  double magnitude = 0.0;
};

struct FlowSet {
  std::vector<Flow> flows;
  std::vector<std::size_t> red_nodes;  // sorted targets of positive flows
};

struct TwoCurrencyTarget {
  std::optional<std::size_t> target;  // empty when no neighbour is better
  std::size_t argmax_neighbor = 0;    // argmax_j (1 - R/R_c(j))
  std::size_t argmin_neighbor = 0;    // argmin_j (1 - R_c(j)/R)
  double dQ1 = 0.0;                   // currency 1 sent from the node to target
  double dQ2 = 0.0;                   // currency 2 counter-flow, negative
};

/// Two currencies, many countries: the node's own ratio plays the market and
/// every neighbour's ratio is a candidate R_c. Ties go to the lowest node
/// index. Throws when n != 2 or the node has no neighbours.
TwoCurrencyTarget best_target_two_currency(const CountryGraph& g, std::size_t node,
                                           const DemandSpec& d1, const DemandSpec& d2,
                                           const FrictionSpec& friction = {});

struct GeneralTarget {
  std::optional<std::size_t> target;
  CurrencyId counter;
  double overvaluation = 0.0;
  double magnitude = 0.0;
};

/// Best (neighbour, counter currency) for sending `currency` out of `node`.
/// R comes from the sender's schedule and R_c from the neighbour's. Ties go
/// to the lowest neighbour index and then the lowest counter index. Returns an
/// empty target when the best overvaluation is <= the friction threshold.
/// Throws when the node has no neighbours.
GeneralTarget best_target_general(const CountryGraph& g, std::size_t node, CurrencyId currency,
                                  const DemandSpec& d, CounterPolicy policy = CounterPolicy::kLowest,
                                  const FrictionSpec& friction = {});

/// Resolves every (node, currency) pair for all currencies above the lowest.
/// Isolated nodes send nothing. Flows are ordered by source, then currency.
FlowSet compute_all_flows(const CountryGraph& g, const DemandSpec& d,
                          const FrictionSpec& friction = {},
                          CounterPolicy policy = CounterPolicy::kLowest);

/// Nodes with at least one neighbour whose value for some non-lowest currency
/// is >= every neighbour's value of it.
std::vector<std::size_t> neighborhood_maxima(const CountryGraph& g);

struct SteadyState {
  /// hosts[j]: nodes where currency j attains its highest value relative to
  /// the lowest currency, for j < n-1.
  std::vector<std::vector<std::size_t>> hosts;
  /// holdings[k]: currencies that node k ends up holding.
  std::vector<std::vector<CurrencyId>> holdings;
  CurrencyId circulating;
};

/// Terminal allocation on a complete graph. Throws when g is not complete.
SteadyState steady_state_partition(const CountryGraph& g);

}  // namespace gresham
