#include <algorithm>

#include <gtest/gtest.h>

#include "gresham/montecarlo.hpp"
#include "gresham/random.hpp"

namespace gresham {
namespace {

ExperimentSpec small_spec(TopologyKind kind, std::size_t trials = 200) {
  ExperimentSpec spec;
  spec.topology.kind = kind;
  spec.trials = trials;
  spec.master_seed = 99;
  return spec;
}

TEST(Rng, OpenIntervalAndBounds) {
  Rng rng(3);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform_open();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(rng.below(7), 7u);
  }
}

TEST(Rng, KnownSplitmixValue) {
  // First output of the reference SplitMix64 generator seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(SampleSchedules, ValidAndDeterministic) {
  for (auto kind : {ValueDistributionKind::kBanded, ValueDistributionKind::kSorted}) {
    const ValueDistribution dist{kind, 1.0, 10.0};
    const auto a = sample_schedules(50, 5, 1234, dist);
    EXPECT_EQ(a, sample_schedules(50, 5, 1234, dist));
    EXPECT_NE(a, sample_schedules(50, 5, 1235, dist));
    for (const auto& s : a) {
      EXPECT_TRUE(validate_schedule(s.values()).empty());
      for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        EXPECT_GT(s.values()[j], 1.0);
        EXPECT_LT(s.values()[j], 10.0);
      }
    }
  }
}

TEST(SampleSchedules, BandedKeepsEachCurrencyInItsSlice) {
  const ValueDistribution dist{ValueDistributionKind::kBanded, 2.0, 6.0};
  for (const auto& s : sample_schedules(200, 5, 7, dist)) {
    // Slices of width 1: currency 0 in (5, 6), currency 3 in (2, 3).
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_GT(s.values()[j], 5.0 - static_cast<double>(j));
      EXPECT_LT(s.values()[j], 6.0 - static_cast<double>(j));
    }
  }
}

TEST(SampleSchedules, TwoCurrencies) {
  for (const auto& s : sample_schedules(20, 2, 5, {})) {
    EXPECT_GT(s.values()[0], 1.0);
    EXPECT_LT(s.values()[0], 10.0);
    EXPECT_EQ(s.values()[1], 1.0);
  }
}

TEST(SampleSchedules, RejectsBadRanges) {
  EXPECT_THROW(sample_schedules(3, 3, 1, {ValueDistributionKind::kBanded, 5.0, 5.0}),
               std::invalid_argument);
  EXPECT_THROW(sample_schedules(3, 3, 1, {ValueDistributionKind::kBanded, 0.5, 5.0}),
               std::invalid_argument);
  EXPECT_THROW(sample_schedules(3, 1, 1, {}), std::invalid_argument);
}

TEST(RunTrial, TwoCountriesTwoCurrenciesHaveOneRedNode) {
  ExperimentSpec spec = small_spec(TopologyKind::kComplete);
  spec.topology.m = 2;
  spec.n = 2;
  for (std::size_t t = 0; t < 50; ++t) {
    const auto g = build_trial_world(spec, t);
    const std::size_t winner = g.schedule(0).values()[0] > g.schedule(1).values()[0] ? 0 : 1;
    const auto flows = compute_all_flows(g, spec.demand);
    EXPECT_EQ(flows.red_nodes, (std::vector<std::size_t>{winner}));
    EXPECT_EQ(run_trial(spec, t).red_count, 1u);
  }
}

TEST(RunTrial, SharedWorldsAcrossTopologies) {
  const auto a = build_trial_world(small_spec(TopologyKind::kComplete), 3);
  const auto b = build_trial_world(small_spec(TopologyKind::kScaleFree), 3);
  EXPECT_EQ(a.schedules(), b.schedules());
}

TEST(RunTrial, CountsBoundedByHosts) {
  const auto spec = small_spec(TopologyKind::kComplete);
  for (std::size_t t = 0; t < 100; ++t) {
    const auto g = build_trial_world(spec, t);
    const auto steady = steady_state_partition(g);
    std::vector<std::size_t> hosts;
    for (const auto& h : steady.hosts) hosts.insert(hosts.end(), h.begin(), h.end());
    std::sort(hosts.begin(), hosts.end());
    hosts.erase(std::unique(hosts.begin(), hosts.end()), hosts.end());
    const auto count = run_trial(spec, t).red_count;
    EXPECT_GE(count, 1u);
    EXPECT_LE(count, hosts.size());
    EXPECT_LE(hosts.size(), spec.n - 1);
  }
}

TEST(RunExperiment, IndependentOfThreadCount) {
  for (auto kind : {TopologyKind::kComplete, TopologyKind::kRandom, TopologyKind::kScaleFree}) {
    const auto spec = small_spec(kind);
    const auto serial = run_experiment(spec, 1);
    const auto parallel = run_experiment(spec, 4);
    EXPECT_EQ(serial.per_trial_counts, parallel.per_trial_counts);
    EXPECT_EQ(serial.per_trial_secondary, parallel.per_trial_secondary);
    EXPECT_EQ(serial.mean, parallel.mean);
    EXPECT_EQ(serial.std_dev, parallel.std_dev);
  }
}

TEST(RunExperiment, StatisticsMatchPerTrialCounts) {
  const auto stats = run_experiment(small_spec(TopologyKind::kRandom), 2);
  ASSERT_EQ(stats.per_trial_counts.size(), 200u);
  double sum = 0.0;
  for (auto c : stats.per_trial_counts) sum += static_cast<double>(c);
  const double mean = sum / 200.0;
  double ss = 0.0;
  for (auto c : stats.per_trial_counts) ss += (static_cast<double>(c) - mean) * (static_cast<double>(c) - mean);
  EXPECT_NEAR(stats.mean, mean, 1e-12);
  EXPECT_NEAR(stats.std_dev, std::sqrt(ss / 199.0), 1e-12);
  EXPECT_GE(stats.mean, 0.0);
  EXPECT_LE(stats.mean, 10.0);
  EXPECT_FALSE(stats.degenerate_sample);
}

TEST(RunExperiment, SingleTrialIsDegenerate) {
  const auto stats = run_experiment(small_spec(TopologyKind::kComplete, 1));
  EXPECT_EQ(stats.std_dev, 0.0);
  EXPECT_TRUE(stats.degenerate_sample);
  EXPECT_THROW(run_experiment(small_spec(TopologyKind::kComplete, 0)), std::invalid_argument);
}

TEST(RunExperiment, PropagatesDomainErrors) {
  auto spec = small_spec(TopologyKind::kScaleFree);
  spec.topology.mean_degree = 4.85;
  EXPECT_THROW(run_experiment(spec, 3), std::invalid_argument);
}

TEST(ValueDistributionKind, StringRoundTrip) {
  EXPECT_EQ(value_distribution_from_string("sorted"), ValueDistributionKind::kSorted);
  EXPECT_EQ(value_distribution_from_string(to_string(ValueDistributionKind::kBanded)),
            ValueDistributionKind::kBanded);
  EXPECT_THROW(value_distribution_from_string("normal"), std::invalid_argument);
}

}  // namespace
}  // namespace gresham
