#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gresham {

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on nodes 0..node_count-1. Edges are stored with
/// a < b, sorted and without duplicates.
struct EdgeList {
  std::size_t node_count = 0;
  std::vector<Edge> edges;
};

enum class TopologyKind { kComplete, kRandom, kScaleFree };

std::string to_string(TopologyKind k);
TopologyKind topology_kind_from_string(const std::string& s);

struct TopologySpec {
  TopologyKind kind = TopologyKind::kComplete;
  std::size_t m = 10;
  double p = 0.48;            // random only
  double mean_degree = 4.8;   // scale_free only
  std::uint64_t seed = 0;
};

EdgeList complete_graph(std::size_t m);

/// G(m, p): each of the m(m-1)/2 pairs is included independently.
EdgeList random_graph(std::size_t m, double p, std::uint64_t seed);

/// Seed clique size and edges attached per later node for preferential
/// attachment with an exact edge budget.
struct ScaleFreePlan {
  std::size_t seed_size = 0;
  std::size_t attachments = 0;
  std::size_t edge_count = 0;
};

/// Smallest clique size s >= 2 for which s(s-1)/2 + (m-s)*a hits m*k/2 edges
/// with 1 <= a < s (or s = m). Throws naming the nearest achievable mean
/// degree when no plan exists.
ScaleFreePlan plan_scale_free(std::size_t m, double mean_degree);

/// Preferential attachment: a clique on the first s nodes, then each new node
/// links to `attachments` distinct earlier nodes chosen with probability
/// proportional to their current degree.
EdgeList scale_free_graph(std::size_t m, double mean_degree, std::uint64_t seed);

EdgeList generate(const TopologySpec& spec);

double mean_degree(const EdgeList& g);

std::vector<std::size_t> degrees(const EdgeList& g);

}  // namespace gresham
