#pragma once

#include <vector>

#include "motifforge/generators.hpp"
#include "motifforge/graph.hpp"
#include "motifforge/neighborhood.hpp"
#include "motifforge/rng.hpp"

namespace motifforge {

struct TrainingPair {
  Graph big;    // anchored
  Graph small;  // anchored
  bool positive = false;
};

namespace detail {

// Anchored connected graph of size in [min_size, target_size]: generate
// from a random family, then keep the component of a uniformly chosen
// eligible anchor. Components below min_size are not eligible.
inline Graph sample_connected_anchored(std::size_t target_size,
                                       std::size_t min_size, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Graph g = generate_with_priors(sample_family(rng), target_size, rng);
    auto comp = g.component_ids();
    std::uint32_t comp_count = 0;
    for (auto c : comp) comp_count = std::max(comp_count, c + 1);
    std::vector<std::size_t> comp_size(comp_count, 0);
    for (auto c : comp) ++comp_size[c];
    std::vector<NodeId> eligible;
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (comp_size[comp[v]] >= min_size) eligible.push_back(v);
    if (eligible.empty()) continue;
    NodeId anchor = eligible[uniform_index(rng, eligible.size())];
    std::vector<NodeId> keep;
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (comp[v] == comp[anchor]) keep.push_back(v);
    Graph out = g.induced(keep);
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (keep[i] == anchor) out.set_anchor(static_cast<NodeId>(i));
    return out;
  }
  throw std::runtime_error("could not sample a connected anchored graph");
}

inline void add_random_edges(Graph& g, std::size_t count, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> non_edges;
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v = u + 1; v < g.node_count(); ++v)
      if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
  auto edges = g.edges();
  count = std::min(count, non_edges.size());
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + uniform_index(rng, non_edges.size() - i);
    std::swap(non_edges[i], non_edges[j]);
    edges.push_back(non_edges[i]);
  }
  std::optional<NodeId> anchor;
  if (g.has_anchor()) anchor = g.anchor();
  g = Graph(g.node_count(), std::move(edges), anchor);
}

}  // namespace detail

/// Streams balanced subgraph-relation pairs: big graphs of size 6..29,
/// positives grown from the big graph's anchor by weighted growth,
/// negatives either a corrupted positive (1..5 extra edges) or an
/// independently generated graph. Labels alternate exactly.
class PairSampler {
 public:
  TrainingPair sample(Rng& rng) {
    bool positive = next_positive_;
    next_positive_ = !next_positive_;

    Graph big = detail::sample_connected_anchored(
        static_cast<std::size_t>(uniform_u64(rng, 6, 29)), 6, rng);
    std::size_t small_size =
        static_cast<std::size_t>(uniform_u64(rng, 5, big.node_count() - 1));

    if (positive) {
      Graph small =
          grow_weighted_from(big, big.anchor(), small_size, rng).graph;
      return {std::move(big), std::move(small), true};
    }
    if (bernoulli(rng, 0.5)) {
      // Corrupted subgraph: extra edges break the relation w.h.p.
      Graph small =
          grow_weighted_from(big, big.anchor(), small_size, rng).graph;
      auto extra = uniform_u64(rng, 1, 5);
      detail::add_random_edges(small, static_cast<std::size_t>(extra), rng);
      return {std::move(big), std::move(small), false};
    }
    Graph small = detail::sample_connected_anchored(small_size, 5, rng);
    while (small.node_count() >= big.node_count()) {
      small = detail::sample_connected_anchored(small_size, 5, rng);
    }
    return {std::move(big), std::move(small), false};
  }

 private:
  bool next_positive_ = true;
};

struct PlantedDataset {
  std::vector<Graph> graphs;
  Graph motif;  // unanchored
};

/// Experiment-2 style benchmark: a random connected motif attached to
/// generator base graphs by `attach_edges` random motif-base edges.
inline PlantedDataset plant_motif_dataset(std::size_t motif_size,
                                          std::size_t base_size,
                                          std::size_t graph_count, Rng& rng,
                                          std::size_t attach_edges = 1) {
  if (motif_size < 3 || base_size < 3)
    throw std::invalid_argument("motif_size and base_size must be >= 3");
  Graph motif;
  bool found = false;
  for (int attempt = 0; attempt < 100; ++attempt) {
    motif = generate_with_priors(sample_family(rng), motif_size, rng);
    if (motif.connected()) {
      found = true;
      break;
    }
  }
  if (!found)
    throw std::runtime_error("no connected motif after 100 draws");

  PlantedDataset out;
  out.motif = motif;
  out.graphs.reserve(graph_count);
  for (std::size_t i = 0; i < graph_count; ++i) {
    Graph base = generate_with_priors(sample_family(rng), base_size, rng);
    auto edges = base.edges();
    for (auto [u, v] : motif.edges())
      edges.emplace_back(static_cast<NodeId>(u + base_size),
                         static_cast<NodeId>(v + base_size));
    std::set<std::pair<NodeId, NodeId>> attachments;
    while (attachments.size() < attach_edges) {
      auto mnode = static_cast<NodeId>(base_size + uniform_index(rng, motif_size));
      auto bnode = static_cast<NodeId>(uniform_index(rng, base_size));
      attachments.emplace(bnode, mnode);
    }
    for (auto [bnode, mnode] : attachments) edges.emplace_back(bnode, mnode);
    out.graphs.emplace_back(base_size + motif_size, std::move(edges));
  }
  return out;
}

}  // namespace motifforge
