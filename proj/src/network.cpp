#include "gresham/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace gresham {

CountryGraph::CountryGraph(EdgeList topology, std::vector<PriceSchedule> schedules)
    : topology_(std::move(topology)), schedules_(std::move(schedules)) {
  const std::size_t m = topology_.node_count;
  if (m == 0) throw std::invalid_argument("country graph needs at least one node");
  if (schedules_.size() != m) throw std::invalid_argument("one schedule per country required");
  const std::size_t n = schedules_.front().size();
  for (const auto& s : schedules_) {
    if (s.size() != n) throw std::invalid_argument("schedules differ in currency count");
  }

  for (auto& e : topology_.edges) {
    if (e.a == e.b) throw std::invalid_argument("self-loop in country graph");
    if (e.a >= m || e.b >= m) throw std::invalid_argument("edge endpoint out of range");
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(topology_.edges.begin(), topology_.edges.end());
  if (std::adjacent_find(topology_.edges.begin(), topology_.edges.end()) != topology_.edges.end()) {
    throw std::invalid_argument("duplicate edge in country graph");
  }

  adjacency_.assign(m, {});
  for (const auto& e : topology_.edges) {
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool CountryGraph::has_edge(std::size_t a, std::size_t b) const {
  const auto adj = neighbors(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

bool CountryGraph::is_complete() const {
  const std::size_t m = node_count();
  return topology_.edges.size() == m * (m - 1) / 2;
}

std::string to_string(CounterPolicy p) { return p == CounterPolicy::kLowest ? "lowest" : "any"; }

CounterPolicy counter_policy_from_string(const std::string& s) {
  if (s == "lowest") return CounterPolicy::kLowest;
  if (s == "any") return CounterPolicy::kAny;
  throw std::invalid_argument("unknown counter policy '" + s + "'");
}

TwoCurrencyTarget best_target_two_currency(const CountryGraph& g, std::size_t node,
                                           const DemandSpec& d1, const DemandSpec& d2,
                                           const FrictionSpec& friction) {
  if (g.currency_count() != 2) throw std::invalid_argument("two-currency world required");
  const auto nbrs = g.neighbors(node);
  if (nbrs.empty()) throw std::invalid_argument("no counterparty");

  const CurrencyId hi{0};
  const CurrencyId lo{1};
  const double market = country_ratio(g.schedule(node), hi, lo);

  TwoCurrencyTarget out;
  double best_max = 0.0;
  double best_min = 0.0;
  bool first = true;
  for (std::size_t k : nbrs) {
    const double rc = country_ratio(g.schedule(k), hi, lo);
    const double gain1 = 1.0 - market / rc;
    const double gain2 = 1.0 - rc / market;
    if (first || gain1 > best_max) {
      best_max = gain1;
      out.argmax_neighbor = k;
    }
    if (first || gain2 < best_min) {
      best_min = gain2;
      out.argmin_neighbor = k;
    }
    first = false;
  }

  if (best_max <= 0.0 || friction.suppresses(best_max)) return out;
  out.target = out.argmax_neighbor;
  out.dQ1 = -d1.quantity() * d1.elasticity() * best_max;
  out.dQ2 = -d2.quantity() * d2.elasticity() * best_min;
  return out;
}

GeneralTarget best_target_general(const CountryGraph& g, std::size_t node, CurrencyId currency,
                                  const DemandSpec& d, CounterPolicy policy,
                                  const FrictionSpec& friction) {
  const std::size_t n = g.currency_count();
  if (currency.index >= n) throw std::invalid_argument("currency out of range");
  const auto nbrs = g.neighbors(node);
  if (nbrs.empty()) throw std::invalid_argument("no counterparty");

  const PriceSchedule& own = g.schedule(node);
  GeneralTarget out;
  double best = 0.0;
  std::optional<std::size_t> best_node;
  CurrencyId best_counter;

  auto consider = [&](std::size_t k, CurrencyId counter) {
    const double market = country_ratio(own, currency, counter);
    const double rc = country_ratio(g.schedule(k), currency, counter);
    const double gain = 1.0 - market / rc;
    if (!best_node || gain > best) {
      best = gain;
      best_node = k;
      best_counter = counter;
    }
  };

  for (std::size_t k : nbrs) {
    if (policy == CounterPolicy::kLowest) {
      if (currency.index + 1 < n) consider(k, CurrencyId{n - 1});
    } else {
      for (std::size_t l = 0; l < n; ++l) {
        if (l != currency.index) consider(k, CurrencyId{l});
      }
    }
  }

  if (!best_node || best <= 0.0 || friction.suppresses(best)) return out;
  out.target = best_node;
  out.counter = best_counter;
  out.overvaluation = best;
  out.magnitude = -d.quantity() * d.elasticity() * best;
  return out;
}

FlowSet compute_all_flows(const CountryGraph& g, const DemandSpec& d, const FrictionSpec& friction,
                          CounterPolicy policy) {
  const std::size_t n = g.currency_count();
  FlowSet out;
  for (std::size_t node = 0; node < g.node_count(); ++node) {
    if (g.neighbors(node).empty()) continue;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const CurrencyId currency{j};
      const GeneralTarget t = best_target_general(g, node, currency, d, policy, friction);
      if (!t.target || !(t.magnitude > 0.0)) continue;
      out.flows.push_back({node, *t.target, currency, t.counter, t.overvaluation, t.magnitude});
      out.red_nodes.push_back(*t.target);
    }
  }
  std::sort(out.red_nodes.begin(), out.red_nodes.end());
  out.red_nodes.erase(std::unique(out.red_nodes.begin(), out.red_nodes.end()), out.red_nodes.end());
  return out;
}

std::vector<std::size_t> neighborhood_maxima(const CountryGraph& g) {
  const std::size_t n = g.currency_count();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < g.node_count(); ++k) {
    const auto nbrs = g.neighbors(k);
    if (nbrs.empty()) continue;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const CurrencyId c{j};
      const double mine = g.schedule(k)[c];
      const bool local_max = std::all_of(nbrs.begin(), nbrs.end(),
                                         [&](std::size_t x) { return mine >= g.schedule(x)[c]; });
      if (local_max) {
        out.push_back(k);
        break;
      }
    }
  }
  return out;
}

SteadyState steady_state_partition(const CountryGraph& g) {
  if (!g.is_complete()) throw std::invalid_argument("steady state requires a complete graph");
  const std::size_t n = g.currency_count();
  const std::size_t m = g.node_count();

  SteadyState out;
  out.hosts.resize(n - 1);
  out.holdings.resize(m);
  out.circulating = CurrencyId{n - 1};
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const CurrencyId c{j};
    double top = g.schedule(0)[c];
    for (std::size_t k = 1; k < m; ++k) top = std::max(top, g.schedule(k)[c]);
    for (std::size_t k = 0; k < m; ++k) {
      if (g.schedule(k)[c] == top) {
        out.hosts[j].push_back(k);
        out.holdings[k].push_back(c);
      }
    }
  }
  return out;
}

}  // namespace gresham
