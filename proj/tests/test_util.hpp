#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "motifforge/graph.hpp"
#include "motifforge/rng.hpp"

namespace mftest {

using namespace motifforge;

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < n; ++i)
    edges.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Hub node 0 connected to `leaves` leaf nodes.
inline Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

inline Graph er_graph(std::size_t n, double p, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (uniform_real(rng) < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Relabels nodes by a random permutation, carrying the anchor along.
inline Graph permuted(const Graph& g, Rng& rng) {
  std::vector<NodeId> perm(g.node_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  std::optional<NodeId> anchor;
  if (g.has_anchor()) anchor = perm[g.anchor()];
  return Graph(g.node_count(), std::move(edges), anchor);
}

/// Brute-force isomorphism over all node bijections.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count()) return false;
  if (a.has_anchor() != b.has_anchor()) return false;
  std::vector<NodeId> perm(a.node_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.has_anchor() && perm[a.anchor()] != b.anchor()) continue;
    bool ok = true;
    for (NodeId u = 0; u < a.node_count() && ok; ++u)
      for (NodeId v = u + 1; v < a.node_count() && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace mftest
