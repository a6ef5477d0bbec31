#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gresham/economy.hpp"

namespace gresham {

/// One arbitrage term for a subject currency i against counter currency j.
/// The ratio is oriented as price(i) / price(j).
struct PairTerm {
  CurrencyId counter;
  DemandSpec demand;
  RatioPair ratio;
};

/// Sum over terms of -Q E_d (1 - R/R_c); positive is a net inflow of `subject`.
/// Throws when a counter currency repeats or equals the subject.
double net_flow_general(CurrencyId subject, std::span<const PairTerm> terms);

/// -Q E_d (count - sum(ratios)) for a demand shared by every pair. `ratios`
/// holds R/R_c per counter currency.
double net_flow_uniform(const DemandSpec& d, std::span<const double> ratios);

enum class FlowDirection { kInflow, kOutflow, kBalanced };

std::string to_string(FlowDirection d);

struct FlowIndicator {
  double mean_ratio = 1.0;
  FlowDirection direction = FlowDirection::kBalanced;
};

/// Mean of R/R_c. A mean below 1 is a net inflow. The direction is decided
/// from sum(ratios) versus count so that it agrees exactly with the sign of
/// net_flow_uniform.
FlowIndicator flow_indicator(std::span<const double> ratios);

struct PairCount {
  double raw = 0.0;        // n*C/2, may be fractional
  double capped = 0.0;     // min(raw, n choose 2)
  long long max_pairs = 0;  // n choose 2
};

PairCount arbitrage_pair_count(long long n, long long mispriced);

enum class CurrencyDirection { kIn, kOut, kMixed, kNone };

std::string to_string(CurrencyDirection d);

struct PairComponent {
  CurrencyId counter;
  double flow = 0.0;
};

struct CurrencyFlow {
  CurrencyId currency;
  double net = 0.0;
  CurrencyDirection direction = CurrencyDirection::kNone;
  std::vector<PairComponent> components;
};

/// Per-currency flows into `country` when `market` supplies the reference
/// prices. `weights[i][j]`, when given, scales the demand quantity for the
/// (i, j) opportunity and must be an n x n matrix of positive entries.
std::vector<CurrencyFlow> pairwise_currency_flows(
    const PriceSchedule& market, const PriceSchedule& country, const DemandSpec& demand,
    const std::optional<std::vector<std::vector<double>>>& weights = std::nullopt,
    const FrictionSpec& friction = {});

struct FiveCurrencyScenario {
  PriceSchedule country_a;
  PriceSchedule country_b;
  std::vector<CurrencyFlow> flows_into_b;
};

/// Countries A and B with currencies 1..5 valued 5,4,3,2,1 in A. B raises
/// currency 2 by the fraction `overvalue` (0 <= overvalue < 0.25, which keeps
/// P1/P2 > 1). `weight_1_2` scales the demand of the 1-vs-2 opportunity.
FiveCurrencyScenario five_currency_scenario(double overvalue = 0.1,
                                            const DemandSpec& demand = DemandSpec(100.0, -2.0),
                                            double weight_1_2 = 1.0,
                                            const FrictionSpec& friction = {});

}  // namespace gresham
