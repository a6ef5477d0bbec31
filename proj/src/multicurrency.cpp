#include "gresham/multicurrency.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gresham {

namespace {

double checked_sum(std::span<const double> ratios) {
  if (ratios.empty()) throw std::invalid_argument("empty ratio sequence");
  double sum = 0.0;
  for (double r : ratios) {
    if (!std::isfinite(r) || !(r > 0.0)) throw std::invalid_argument("ratios must be positive");
    sum += r;
  }
  return sum;
}

}  // namespace

double net_flow_general(CurrencyId subject, std::span<const PairTerm> terms) {
  std::vector<std::size_t> seen;
  seen.reserve(terms.size());
  double total = 0.0;
  for (const auto& term : terms) {
    if (term.counter == subject) throw std::invalid_argument("counter currency equals subject");
    if (std::find(seen.begin(), seen.end(), term.counter.index) != seen.end()) {
      throw std::invalid_argument("duplicate counter currency");
    }
    seen.push_back(term.counter.index);
    total += -term.demand.quantity() * term.demand.elasticity() *
             (1.0 - term.ratio.market() / term.ratio.country());
  }
  return total;
}

double net_flow_uniform(const DemandSpec& d, std::span<const double> ratios) {
  const double sum = checked_sum(ratios);
  return -d.quantity() * d.elasticity() * (static_cast<double>(ratios.size()) - sum);
}

std::string to_string(FlowDirection d) {
  switch (d) {
    case FlowDirection::kInflow:
      return "inflow";
    case FlowDirection::kOutflow:
      return "outflow";
    case FlowDirection::kBalanced:
      return "balanced";
  }
  return "balanced";
}

FlowIndicator flow_indicator(std::span<const double> ratios) {
  const double sum = checked_sum(ratios);
  const auto count = static_cast<double>(ratios.size());
  FlowIndicator out;
  out.mean_ratio = sum / count;
  if (sum < count) {
    out.direction = FlowDirection::kInflow;
  } else if (sum > count) {
    out.direction = FlowDirection::kOutflow;
  } else {
    out.direction = FlowDirection::kBalanced;
  }
  return out;
}

PairCount arbitrage_pair_count(long long n, long long mispriced) {
  if (n < 1) throw std::invalid_argument("currency count must be positive");
  if (mispriced < 0 || mispriced > n) {
    throw std::invalid_argument("mispriced currency count must lie in [0, n]");
  }
  PairCount out;
  out.raw = static_cast<double>(n) * static_cast<double>(mispriced) / 2.0;
  out.max_pairs = n * (n - 1) / 2;
  out.capped = std::min(out.raw, static_cast<double>(out.max_pairs));
  return out;
}

std::string to_string(CurrencyDirection d) {
  switch (d) {
    case CurrencyDirection::kIn:
      return "in";
    case CurrencyDirection::kOut:
      return "out";
    case CurrencyDirection::kMixed:
      return "mixed";
    case CurrencyDirection::kNone:
      return "none";
  }
  return "none";
}

std::vector<CurrencyFlow> pairwise_currency_flows(
    const PriceSchedule& market, const PriceSchedule& country, const DemandSpec& demand,
    const std::optional<std::vector<std::vector<double>>>& weights, const FrictionSpec& friction) {
  const std::size_t n = market.size();
  if (country.size() != n) throw std::invalid_argument("schedules differ in currency count");
  if (weights) {
    if (weights->size() != n) throw std::invalid_argument("weights must be an n x n matrix");
    for (const auto& row : *weights) {
      if (row.size() != n) throw std::invalid_argument("weights must be an n x n matrix");
      for (double w : row) {
        if (!std::isfinite(w) || !(w > 0.0)) throw std::invalid_argument("weights must be positive");
      }
    }
  }

  std::vector<CurrencyFlow> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CurrencyId subject{i};
    CurrencyFlow cf{subject, 0.0, CurrencyDirection::kNone, {}};
    std::vector<PairTerm> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const CurrencyId counter{j};
      const RatioPair ratio(country_ratio(market, subject, counter),
                            country_ratio(country, subject, counter));
      const double scale = weights ? (*weights)[i][j] : 1.0;
      const DemandSpec d(demand.quantity() * scale, demand.elasticity());
      const PairTerm term{counter, d, ratio};
      double flow = 0.0;
      if (!friction.suppresses(overvaluation(ratio))) {
        flow = net_flow_general(subject, std::span<const PairTerm>(&term, 1));
        terms.push_back(term);
      }
      cf.components.push_back({counter, flow});
    }
    cf.net = net_flow_general(subject, terms);

    bool any_in = false;
    bool any_out = false;
    for (const auto& c : cf.components) {
      any_in = any_in || c.flow > 0.0;
      any_out = any_out || c.flow < 0.0;
    }
    if (any_in && any_out) {
      cf.direction = CurrencyDirection::kMixed;
    } else if (any_in) {
      cf.direction = CurrencyDirection::kIn;
    } else if (any_out) {
      cf.direction = CurrencyDirection::kOut;
    }
    out.push_back(std::move(cf));
  }
  return out;
}

FiveCurrencyScenario five_currency_scenario(double overvalue, const DemandSpec& demand,
                                            double weight_1_2, const FrictionSpec& friction) {
  if (!(overvalue >= 0.0 && overvalue < 0.25)) {
    throw std::invalid_argument("overvalue must lie in [0, 0.25) so that P1/P2 stays above 1");
  }
  if (!std::isfinite(weight_1_2) || !(weight_1_2 > 0.0)) {
    throw std::invalid_argument("weights must be positive");
  }
  PriceSchedule a({5.0, 4.0, 3.0, 2.0, 1.0});
  PriceSchedule b({5.0, 4.0 * (1.0 + overvalue), 3.0, 2.0, 1.0});

  std::vector<std::vector<double>> weights(5, std::vector<double>(5, 1.0));
  weights[0][1] = weight_1_2;
  weights[1][0] = weight_1_2;

  auto flows = pairwise_currency_flows(a, b, demand, weights, friction);
  return {std::move(a), std::move(b), std::move(flows)};
}

}  // namespace gresham
