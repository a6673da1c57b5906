#pragma once

#include <vector>

#include "motifforge/graph.hpp"
#include "motifforge/rng.hpp"

namespace motifforge {

/// An anchored subgraph extracted from a target, with the back-map from
/// its contiguous node ids to the target's.
struct ExtractedSubgraph {
  Graph graph;                  // anchored
  std::vector<NodeId> origin;   // origin[i] = target node id of node i
};

/// Induced subgraph on all nodes at BFS distance <= k from `center`,
/// anchored at the center.
inline ExtractedSubgraph k_hop_neighborhood(const Graph& target, NodeId center,
                                            std::size_t k) {
  auto dist = target.bfs_distances(center);
  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < target.node_count(); ++v)
    if (dist[v] != Graph::kUnreached && dist[v] <= k) nodes.push_back(v);
  Graph g = target.induced(nodes);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == center) g.set_anchor(static_cast<NodeId>(i));
  return {std::move(g), std::move(nodes)};
}

/// MFinder-style growth from a fixed seed: repeatedly add a frontier
/// node chosen with probability proportional to its edge count into the
/// grown set, until `max_size` nodes or the frontier empties.
inline ExtractedSubgraph grow_weighted_from(const Graph& target, NodeId seed,
                                            std::size_t max_size, Rng& rng) {
  std::vector<NodeId> nodes{seed};
  std::vector<bool> in_set(target.node_count(), false);
  in_set[seed] = true;
  // edges_in[v] = edges from v into the grown set; frontier = nonzero.
  std::vector<std::uint32_t> edges_in(target.node_count(), 0);
  std::vector<NodeId> frontier;
  auto absorb = [&](NodeId v) {
    for (NodeId u : target.neighbors(v)) {
      if (in_set[u]) continue;
      if (edges_in[u] == 0) frontier.push_back(u);
      ++edges_in[u];
    }
  };
  absorb(seed);
  while (nodes.size() < max_size && !frontier.empty()) {
    std::uint64_t total = 0;
    for (NodeId v : frontier) total += edges_in[v];
    std::uint64_t pick = uniform_u64(rng, 0, total - 1);
    std::size_t idx = 0;
    while (pick >= edges_in[frontier[idx]]) pick -= edges_in[frontier[idx++]];
    NodeId chosen = frontier[idx];
    frontier[idx] = frontier.back();
    frontier.pop_back();
    in_set[chosen] = true;
    edges_in[chosen] = 0;
    nodes.push_back(chosen);
    absorb(chosen);
  }
  std::sort(nodes.begin() + 1, nodes.end());
  Graph g = target.induced(nodes);
  g.set_anchor(0);  // seed stays node 0
  return {std::move(g), std::move(nodes)};
}

/// MFinder growth from a uniformly random anchor.
inline ExtractedSubgraph sample_weighted_neighborhood(const Graph& target,
                                                      Rng& rng,
                                                      std::size_t max_size) {
  if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
  NodeId seed = static_cast<NodeId>(uniform_index(rng, target.node_count()));
  return grow_weighted_from(target, seed, max_size, rng);
}

}  // namespace motifforge
