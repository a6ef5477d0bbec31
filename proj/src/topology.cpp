#include "gresham/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gresham/random.hpp"

namespace gresham {

std::string to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::kComplete:
      return "complete";
    case TopologyKind::kRandom:
      return "random";
    case TopologyKind::kScaleFree:
      return "scale_free";
  }
  return "complete";
}

TopologyKind topology_kind_from_string(const std::string& s) {
  if (s == "complete") return TopologyKind::kComplete;
  if (s == "random") return TopologyKind::kRandom;
  if (s == "scale_free") return TopologyKind::kScaleFree;
  throw std::invalid_argument("unknown topology kind '" + s + "'");
}

EdgeList complete_graph(std::size_t m) {
  if (m < 2) throw std::invalid_argument("complete graph needs at least 2 nodes");
  EdgeList g{m, {}};
  g.edges.reserve(m * (m - 1) / 2);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) g.edges.push_back({a, b});
  }
  return g;
}

EdgeList random_graph(std::size_t m, double p, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random graph needs at least 1 node");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  EdgeList g{m, {}};
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (rng.bernoulli(p)) g.edges.push_back({a, b});
    }
  }
  return g;
}

ScaleFreePlan plan_scale_free(std::size_t m, double mean_degree) {
  if (m < 2) throw std::invalid_argument("scale-free graph needs at least 2 nodes");
  if (!std::isfinite(mean_degree) || !(mean_degree > 0.0)) {
    throw std::invalid_argument("mean degree must be positive");
  }

  const double target = static_cast<double>(m) * mean_degree / 2.0;
  const double rounded = std::round(target);
  const bool integral = std::abs(target - rounded) <= 1e-9 * std::max(1.0, target);

  std::size_t best_edges = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t s = 2; s <= m; ++s) {
    const std::size_t clique = s * (s - 1) / 2;
    const std::size_t a_max = (s == m) ? 0 : s - 1;
    for (std::size_t a = (s == m) ? 0 : 1; a <= a_max; ++a) {
      const std::size_t edges = clique + (m - s) * a;
      if (integral && static_cast<double>(edges) == rounded) return {s, a, edges};
      const double gap = std::abs(static_cast<double>(edges) - target);
      if (gap < best_gap) {
        best_gap = gap;
        best_edges = edges;
      }
    }
  }

  std::ostringstream msg;
  msg << "mean degree " << mean_degree << " is not achievable for m=" << m
      << "; nearest achievable is " << 2.0 * static_cast<double>(best_edges) / static_cast<double>(m);
  throw std::invalid_argument(msg.str());
}

EdgeList scale_free_graph(std::size_t m, double mean_degree, std::uint64_t seed) {
  const ScaleFreePlan plan = plan_scale_free(m, mean_degree);
  Rng rng(seed);

  EdgeList g{m, {}};
  g.edges.reserve(plan.edge_count);
  // Node v appears once per incident edge, so a uniform pick from this pool
  // is a degree-proportional pick.
  std::vector<std::size_t> pool;
  pool.reserve(2 * plan.edge_count);

  for (std::size_t a = 0; a < plan.seed_size; ++a) {
    for (std::size_t b = a + 1; b < plan.seed_size; ++b) {
      g.edges.push_back({a, b});
      pool.push_back(a);
      pool.push_back(b);
    }
  }

  std::vector<std::size_t> chosen;
  for (std::size_t v = plan.seed_size; v < m; ++v) {
    chosen.clear();
    while (chosen.size() < plan.attachments) {
      const std::size_t u = pool[rng.below(pool.size())];
      if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) chosen.push_back(u);
    }
    for (std::size_t u : chosen) {
      g.edges.push_back({u, v});
      pool.push_back(u);
      pool.push_back(v);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

EdgeList generate(const TopologySpec& spec) {
  switch (spec.kind) {
    case TopologyKind::kComplete:
      return complete_graph(spec.m);
    case TopologyKind::kRandom:
      return random_graph(spec.m, spec.p, spec.seed);
    case TopologyKind::kScaleFree:
      return scale_free_graph(spec.m, spec.mean_degree, spec.seed);
  }
  throw std::invalid_argument("unknown topology kind");
}

double mean_degree(const EdgeList& g) {
  if (g.node_count == 0) return 0.0;
  return 2.0 * static_cast<double>(g.edges.size()) / static_cast<double>(g.node_count);
}

std::vector<std::size_t> degrees(const EdgeList& g) {
  std::vector<std::size_t> deg(g.node_count, 0);
  for (const auto& e : g.edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

}  // namespace gresham
