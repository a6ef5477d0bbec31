#include "gresham/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gresham/random.hpp"

namespace gresham {

namespace {

constexpr std::uint64_t kGraphStream = 0;
constexpr std::uint64_t kScheduleStream = 1;

std::vector<double> draw_values(Rng& rng, std::size_t n, const ValueDistribution& dist) {
  std::vector<double> v(n);
  if (dist.kind == ValueDistributionKind::kSorted) {
    for (std::size_t j = 0; j + 1 < n; ++j) v[j] = rng.uniform(dist.lo, dist.hi);
    std::sort(v.begin(), v.end() - 1, std::greater<>());
  } else {
    const double width = (dist.hi - dist.lo) / static_cast<double>(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double floor = dist.lo + static_cast<double>(n - 2 - j) * width;
      v[j] = rng.uniform(floor, floor + width);
    }
  }
  v[n - 1] = 1.0;
  return v;
}

}  // namespace

std::string to_string(ValueDistributionKind k) {
  return k == ValueDistributionKind::kBanded ? "banded" : "sorted";
}

ValueDistributionKind value_distribution_from_string(const std::string& s) {
  if (s == "banded") return ValueDistributionKind::kBanded;
  if (s == "sorted") return ValueDistributionKind::kSorted;
  throw std::invalid_argument("unknown value distribution '" + s + "'");
}

std::vector<PriceSchedule> sample_schedules(std::size_t m, std::size_t n, std::uint64_t seed,
                                            const ValueDistribution& dist) {
  if (n < 2) throw std::invalid_argument("at least two currencies required");
  if (!std::isfinite(dist.lo) || !std::isfinite(dist.hi) || !(dist.lo < dist.hi)) {
    throw std::invalid_argument("value distribution needs lo < hi");
  }
  if (!(dist.lo >= 1.0)) throw std::invalid_argument("value distribution needs lo >= 1");

  Rng rng(seed);
  std::vector<PriceSchedule> out;
  out.reserve(m);
  while (out.size() < m) {
    // Redraw on the measure-zero events (tie, draw rounding onto 1).
    auto values = draw_values(rng, n, dist);
    if (validate_schedule(values).empty()) out.emplace_back(std::move(values));
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return derive_seed(master_seed, trial_index);
}

CountryGraph build_trial_world(const ExperimentSpec& spec, std::size_t trial_index) {
  const std::uint64_t seed = trial_seed(spec.master_seed, trial_index);
  TopologySpec topo = spec.topology;
  topo.seed = derive_seed(seed, kGraphStream);
  return CountryGraph(generate(topo), sample_schedules(spec.topology.m, spec.n,
                                                       derive_seed(seed, kScheduleStream),
                                                       spec.values));
}

TrialOutcome run_trial(const ExperimentSpec& spec, std::size_t trial_index) {
  const CountryGraph g = build_trial_world(spec, trial_index);
  const FlowSet flows = compute_all_flows(g, spec.demand, spec.friction, spec.policy);
  return {flows.red_nodes.size(), neighborhood_maxima(g).size()};
}

TrialStats run_experiment(const ExperimentSpec& spec, unsigned threads) {
  if (spec.trials < 1) throw std::invalid_argument("at least one trial required");
  if (spec.n < 2) throw std::invalid_argument("at least two currencies required");

  std::vector<TrialOutcome> outcomes(spec.trials);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, spec.trials));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < spec.trials; t = next++) {
      try {
        outcomes[t] = run_trial(spec, t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = spec.trials;
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  TrialStats stats;
  stats.per_trial_counts.reserve(spec.trials);
  stats.per_trial_secondary.reserve(spec.trials);
  for (const auto& o : outcomes) {
    stats.per_trial_counts.push_back(o.red_count);
    stats.per_trial_secondary.push_back(o.secondary_count);
  }

  // Summed in trial order so the result is independent of scheduling.
  auto summarize = [&](const std::vector<std::size_t>& xs, double& mean, double& sd) {
    double sum = 0.0;
    for (auto x : xs) sum += static_cast<double>(x);
    mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) {
      sd = 0.0;
      return;
    }
    double ss = 0.0;
    for (auto x : xs) ss += (static_cast<double>(x) - mean) * (static_cast<double>(x) - mean);
    sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  };
  summarize(stats.per_trial_counts, stats.mean, stats.std_dev);
  summarize(stats.per_trial_secondary, stats.secondary_mean, stats.secondary_std_dev);
  stats.degenerate_sample = spec.trials == 1;
  return stats;
}

}  // namespace gresham
