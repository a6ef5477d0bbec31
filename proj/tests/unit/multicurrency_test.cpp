#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gresham/multicurrency.hpp"
#include "test_support.hpp"

namespace gresham {
namespace {

using ::gresham::testing::random_schedule;
using ::gresham::testing::uniform;

TEST(NetFlowUniform, HandValues) {
  const DemandSpec d(100.0, -2.0);
  const std::vector<double> under{0.9, 0.95, 1.0};
  EXPECT_NEAR(net_flow_uniform(d, under), 30.0, 1e-12);  // 200 * (3 - 2.85)
  const std::vector<double> over{1.1, 1.2};
  EXPECT_NEAR(net_flow_uniform(DemandSpec(50.0, -1.0), over), -15.0, 1e-12);
  const std::vector<double> ones{1.0, 1.0, 1.0};
  EXPECT_EQ(net_flow_uniform(d, ones), 0.0);
  EXPECT_THROW(net_flow_uniform(d, std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(net_flow_uniform(d, std::vector<double>{1.0, -1.0}), std::invalid_argument);
}

TEST(NetFlowGeneral, RejectsSelfAndDuplicateCounters) {
  const DemandSpec d(1.0, -1.0);
  const RatioPair r(1.0, 2.0);
  const std::vector<PairTerm> self{{CurrencyId{0}, d, r}};
  EXPECT_THROW(net_flow_general(CurrencyId{0}, self), std::invalid_argument);
  const std::vector<PairTerm> dup{{CurrencyId{1}, d, r}, {CurrencyId{1}, d, r}};
  EXPECT_THROW(net_flow_general(CurrencyId{0}, dup), std::invalid_argument);
  EXPECT_EQ(net_flow_general(CurrencyId{0}, std::vector<PairTerm>{}), 0.0);
}

TEST(NetFlow, GeneralReducesToUniform) {
  std::mt19937_64 gen(23);
  for (int t = 0; t < 1000; ++t) {
    const DemandSpec d(uniform(gen, 1, 500), -uniform(gen, 0.1, 5));
    const std::size_t count = 1 + gen() % 8;
    std::vector<PairTerm> terms;
    std::vector<double> ratios;
    for (std::size_t j = 0; j < count; ++j) {
      const double r = uniform(gen, 0.5, 2), rc = uniform(gen, 0.5, 2);
      terms.push_back({CurrencyId{j + 1}, d, RatioPair(r, rc)});
      ratios.push_back(r / rc);
    }
    const double general = net_flow_general(CurrencyId{0}, terms);
    const double uniform_form = net_flow_uniform(d, ratios);
    EXPECT_NEAR(general, uniform_form, 1e-10 * (1.0 + std::abs(general)));
  }
}

TEST(FlowIndicator, AgreesWithUniformSign) {
  std::mt19937_64 gen(29);
  const DemandSpec d(100.0, -2.0);
  for (int t = 0; t < 10000; ++t) {
    std::vector<double> ratios(1 + gen() % 6);
    for (auto& r : ratios) r = (gen() % 5 == 0) ? 1.0 : uniform(gen, 0.8, 1.25);
    const double flow = net_flow_uniform(d, ratios);
    const auto ind = flow_indicator(ratios);
    switch (ind.direction) {
      case FlowDirection::kInflow:
        EXPECT_GT(flow, 0.0);
        break;
      case FlowDirection::kOutflow:
        EXPECT_LT(flow, 0.0);
        break;
      case FlowDirection::kBalanced:
        EXPECT_EQ(flow, 0.0);
        break;
    }
  }
}

TEST(FlowIndicator, HandValues) {
  const std::vector<double> in{0.9, 0.95, 1.0};
  EXPECT_EQ(flow_indicator(in).direction, FlowDirection::kInflow);
  EXPECT_NEAR(flow_indicator(in).mean_ratio, 0.95, 1e-15);
  EXPECT_EQ(flow_indicator(std::vector<double>{1.1, 1.2}).direction, FlowDirection::kOutflow);
  EXPECT_EQ(flow_indicator(std::vector<double>{1.0}).direction, FlowDirection::kBalanced);
}

TEST(ArbitragePairCount, RawAndCapped) {
  const auto a = arbitrage_pair_count(4, 2);
  EXPECT_EQ(a.raw, 4.0);
  EXPECT_EQ(a.capped, 4.0);
  EXPECT_EQ(a.max_pairs, 6);
  const auto b = arbitrage_pair_count(5, 3);
  EXPECT_EQ(b.raw, 7.5);
  EXPECT_EQ(b.capped, 7.5);
  const auto c = arbitrage_pair_count(3, 3);
  EXPECT_EQ(c.raw, 4.5);
  EXPECT_EQ(c.capped, 3.0);
  EXPECT_EQ(arbitrage_pair_count(7, 0).raw, 0.0);
  EXPECT_THROW(arbitrage_pair_count(3, 4), std::invalid_argument);
  EXPECT_THROW(arbitrage_pair_count(0, 0), std::invalid_argument);
}

TEST(PairwiseFlows, IdenticalSchedulesGiveNoFlow) {
  std::mt19937_64 gen(31);
  const auto s = random_schedule(gen, 5);
  for (const auto& cf : pairwise_currency_flows(s, s, DemandSpec(1, -1))) {
    EXPECT_EQ(cf.net, 0.0);
    EXPECT_EQ(cf.direction, CurrencyDirection::kNone);
    EXPECT_EQ(cf.components.size(), 4u);
  }
}

TEST(FiveCurrencyScenario, DirectionsFromPairTerms) {
  const auto sc = five_currency_scenario();
  ASSERT_EQ(sc.flows_into_b.size(), 5u);
  EXPECT_DOUBLE_EQ(sc.country_b[CurrencyId{1}], 4.4);
  // Currency 2 in B: each pair term is 200 * (1 - 1/1.1) = 200/11.
  EXPECT_EQ(sc.flows_into_b[1].direction, CurrencyDirection::kIn);
  EXPECT_NEAR(sc.flows_into_b[1].net, 4.0 * 200.0 / 11.0, 1e-10);
  // Every other currency only has its term against currency 2: 200 * (1 - 1.1).
  for (std::size_t i : {0u, 2u, 3u, 4u}) {
    EXPECT_EQ(sc.flows_into_b[i].direction, CurrencyDirection::kOut) << i;
    EXPECT_NEAR(sc.flows_into_b[i].net, -20.0, 1e-10) << i;
    for (const auto& c : sc.flows_into_b[i].components) {
      if (c.counter.index != 1) EXPECT_EQ(c.flow, 0.0);
    }
  }
}

TEST(FiveCurrencyScenario, WeightSweepKeepsCurrencyTwoInflowing) {
  for (double w = 1e-3; w <= 1e3; w *= 1.5) {
    const auto sc = five_currency_scenario(0.1, DemandSpec(100, -2), w);
    EXPECT_EQ(sc.flows_into_b[1].direction, CurrencyDirection::kIn) << w;
    EXPECT_GT(sc.flows_into_b[1].net, 0.0) << w;
    EXPECT_LT(sc.flows_into_b[0].net, 0.0) << w;
  }
}

TEST(FiveCurrencyScenario, FrictionAboveGapSilencesAll) {
  const auto sc = five_currency_scenario(0.1, DemandSpec(100, -2), 1.0, FrictionSpec(0.2));
  for (const auto& cf : sc.flows_into_b) EXPECT_EQ(cf.direction, CurrencyDirection::kNone);
}

TEST(FiveCurrencyScenario, RejectsOutOfRangeInputs) {
  EXPECT_THROW(five_currency_scenario(0.25), std::invalid_argument);
  EXPECT_THROW(five_currency_scenario(-0.1), std::invalid_argument);
  EXPECT_THROW(five_currency_scenario(0.1, DemandSpec(1, -1), 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace gresham
