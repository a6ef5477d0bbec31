#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gresham/economy.hpp"
#include "gresham/network.hpp"
#include "gresham/topology.hpp"

namespace gresham {

/// How face values are drawn for the n-1 currencies above the lowest.
///   kBanded: (lo, hi) is cut into n-1 equal slices, currency j is uniform in
///            its own slice (highest slice for currency 0).
///   kSorted: n-1 i.i.d. Uniform(lo, hi) draws sorted descending.
/// Either way the lowest currency is pinned at 1.
enum class ValueDistributionKind { kBanded, kSorted };

std::string to_string(ValueDistributionKind k);
ValueDistributionKind value_distribution_from_string(const std::string& s);

struct ValueDistribution {
  ValueDistributionKind kind = ValueDistributionKind::kBanded;
  double lo = 1.0;
  double hi = 10.0;
};

struct ExperimentSpec {
  TopologySpec topology;  // seed is replaced per trial
  std::size_t n = 5;
  std::size_t trials = 1000;
  std::uint64_t master_seed = 0;
  ValueDistribution values;
  DemandSpec demand{100.0, -2.0};
  FrictionSpec friction;
  CounterPolicy policy = CounterPolicy::kLowest;
};

struct TrialOutcome {
  std::size_t red_count = 0;
  std::size_t secondary_count = 0;  // neighborhood-maximum definition
};

struct TrialStats {
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation, 0 for a single trial
  double secondary_mean = 0.0;
  double secondary_std_dev = 0.0;
  bool degenerate_sample = false;  // trials == 1
  std::vector<std::size_t> per_trial_counts;
  std::vector<std::size_t> per_trial_secondary;
};

/// One valid schedule per country. Deterministic in `seed`. Throws when
/// lo >= hi or lo < 1.
std::vector<PriceSchedule> sample_schedules(std::size_t m, std::size_t n, std::uint64_t seed,
                                            const ValueDistribution& dist);

/// derive_seed(master_seed, trial_index).
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// Graph and schedules for one trial. Trials with the same index share their
/// schedules and graph seed across topologies.
CountryGraph build_trial_world(const ExperimentSpec& spec, std::size_t trial_index);

TrialOutcome run_trial(const ExperimentSpec& spec, std::size_t trial_index);

/// Runs every trial, on `threads` workers (0 = hardware concurrency). The
/// result does not depend on the worker count.
TrialStats run_experiment(const ExperimentSpec& spec, unsigned threads = 0);

}  // namespace gresham
