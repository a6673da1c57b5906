#pragma once

#include <vector>

#include "motifforge/errors.hpp"
#include "motifforge/graph.hpp"
#include "motifforge/motif_table.hpp"

namespace motifforge {

// Brute-force reference implementations. Deliberately free of the
// pruning and ordering tricks of the production paths; every fast
// counting path is validated against these.

namespace detail {

inline bool brute_extend(const Graph& q, const Graph& t,
                         std::vector<NodeId>& map, std::vector<bool>& used,
                         NodeId next) {
  if (next == q.node_count()) {
    for (NodeId a = 0; a < q.node_count(); ++a)
      for (NodeId b = a + 1; b < q.node_count(); ++b)
        if (q.has_edge(a, b) != t.has_edge(map[a], map[b])) return false;
    return true;
  }
  if (map[next] != kNoNode) return brute_extend(q, t, map, used, next + 1);
  for (NodeId cand = 0; cand < t.node_count(); ++cand) {
    if (used[cand]) continue;
    map[next] = cand;
    used[cand] = true;
    if (brute_extend(q, t, map, used, next + 1)) {
      used[cand] = false;
      map[next] = kNoNode;
      return true;
    }
    used[cand] = false;
    map[next] = kNoNode;
  }
  return false;
}

}  // namespace detail

/// All-injections induced-subgraph test with the anchor pair pinned.
inline bool brute_force_anchored_subgraph(const Graph& query, const Graph& target) {
  if (query.node_count() > target.node_count()) return false;
  std::vector<NodeId> map(query.node_count(), kNoNode);
  std::vector<bool> used(target.node_count(), false);
  map[query.anchor()] = target.anchor();
  used[target.anchor()] = true;
  return detail::brute_extend(query, target, map, used, 0);
}

inline std::size_t brute_force_anchored_frequency(const Graph& query,
                                                  const Graph& target) {
  std::size_t count = 0;
  for (NodeId u = 0; u < target.node_count(); ++u)
    if (brute_force_anchored_subgraph(query, target.with_anchor(u))) ++count;
  return count;
}

/// Iterates every k-subset of the target (no ESU tree), keeps connected
/// ones, and accumulates the same table enumerate_exact produces.
inline MotifTable naive_enumerate(const Graph& target, std::size_t k,
                                  bool anchored,
                                  std::size_t budget = 200'000'000) {
  MotifTable table;
  const std::size_t n = target.node_count();
  if (k == 0 || k > n) return table;
  std::vector<NodeId> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<NodeId>(i);
  std::vector<NodeId> nodes(subset.begin(), subset.end());
  while (true) {
    if (budget-- == 0) throw BudgetError("naive enumeration budget exhausted");
    nodes.assign(subset.begin(), subset.end());
    Graph ind = target.induced(nodes).without_anchor();
    if (ind.connected()) {
      auto& entry = table.entry_for(ind);
      entry.count += 1;
      entry.weight += 1;
      if (anchored) {
        for (std::size_t i = 0; i < k; ++i) {
          auto& orbit = table.orbit_for(entry, ind.with_anchor(static_cast<NodeId>(i)));
          orbit.distinct.insert(nodes[i]);
        }
      }
    }
    // next combination
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  table.finalize_distinct();
  return table;
}

}  // namespace motifforge
