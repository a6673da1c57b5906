#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "motifforge/errors.hpp"
#include "motifforge/graph.hpp"
#include "motifforge/subgraph_enum.hpp"

namespace motifforge {

/// Injective node map from query ids to target ids, edge-preserving in
/// both directions on its image (node-induced semantics).
struct IsoMapping {
  std::vector<NodeId> assignment;  // index = query node id
};

namespace detail {

// Backtracking induced-subgraph matcher (VF2 style). Query node order:
// most already-mapped neighbors first, ties by higher degree then lower
// id. The anchor pair, when required, is fixed as the first assignment.
class InducedMatcher {
 public:
  InducedMatcher(const Graph& query, const Graph& target)
      : q_(query),
        t_(target),
        map_(query.node_count(), kNoNode),
        used_(target.node_count(), false) {}

  std::optional<IsoMapping> run(bool require_anchor_match) {
    if (q_.node_count() > t_.node_count()) return std::nullopt;
    if (require_anchor_match) {
      NodeId qa = q_.anchor(), ta = t_.anchor();
      if (!feasible(qa, ta)) return std::nullopt;
      assign(qa, ta);
      if (extend(1)) return IsoMapping{map_};
      return std::nullopt;
    }
    if (q_.node_count() == 0) return IsoMapping{map_};
    if (extend(0)) return IsoMapping{map_};
    return std::nullopt;
  }

 private:
  void assign(NodeId q, NodeId t) {
    map_[q] = t;
    used_[t] = true;
  }
  void unassign(NodeId q) {
    used_[map_[q]] = false;
    map_[q] = kNoNode;
  }

  // Edge-iff consistency of the candidate pair against all mapped nodes,
  // plus a degree bound.
  bool feasible(NodeId q, NodeId t) const {
    if (used_[t]) return false;
    if (t_.degree(t) < q_.degree(q)) return false;
    for (NodeId w = 0; w < map_.size(); ++w) {
      if (map_[w] == kNoNode) continue;
      if (q_.has_edge(q, w) != t_.has_edge(t, map_[w])) return false;
    }
    return true;
  }

  NodeId pick_next() const {
    NodeId best = kNoNode;
    std::size_t best_mapped = 0, best_deg = 0;
    for (NodeId q = 0; q < map_.size(); ++q) {
      if (map_[q] != kNoNode) continue;
      std::size_t mapped = 0;
      for (NodeId w : q_.neighbors(q))
        if (map_[w] != kNoNode) ++mapped;
      if (best == kNoNode || mapped > best_mapped ||
          (mapped == best_mapped && q_.degree(q) > best_deg)) {
        best = q;
        best_mapped = mapped;
        best_deg = q_.degree(q);
      }
    }
    return best;
  }

  bool extend(std::size_t depth) {
    if (depth == q_.node_count()) return true;
    NodeId q = pick_next();
    // Candidates: neighbors of a mapped neighbor's image when one
    // exists, otherwise every unused target node.
    NodeId pivot = kNoNode;
    for (NodeId w : q_.neighbors(q))
      if (map_[w] != kNoNode &&
          (pivot == kNoNode || t_.degree(map_[w]) < t_.degree(pivot)))
        pivot = map_[w];
    if (pivot != kNoNode) {
      for (NodeId t : t_.neighbors(pivot)) {
        if (!feasible(q, t)) continue;
        assign(q, t);
        if (extend(depth + 1)) return true;
        unassign(q);
      }
    } else {
      for (NodeId t = 0; t < used_.size(); ++t) {
        if (!feasible(q, t)) continue;
        assign(q, t);
        if (extend(depth + 1)) return true;
        unassign(q);
      }
    }
    return false;
  }

  const Graph& q_;
  const Graph& t_;
  std::vector<NodeId> map_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Anchor-respecting node-induced subgraph test; returns a witness
/// mapping when one exists. Both anchors must be present.
inline std::optional<IsoMapping> is_anchored_subgraph(const Graph& query,
                                                      const Graph& target) {
  if (!query.has_anchor() || !target.has_anchor())
    throw std::invalid_argument("is_anchored_subgraph requires both anchors");
  return detail::InducedMatcher(query, target).run(true);
}

/// Unanchored node-induced subgraph test.
inline std::optional<IsoMapping> is_induced_subgraph(const Graph& query,
                                                     const Graph& target) {
  return detail::InducedMatcher(query, target).run(false);
}

/// Full isomorphism, respecting anchors when both graphs carry one.
/// Intended for small graphs (de-duplication confirmation).
inline bool exact_isomorphic(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (a.has_anchor() != b.has_anchor()) return false;
  std::vector<std::size_t> da, db;
  for (NodeId v = 0; v < a.node_count(); ++v) da.push_back(a.degree(v));
  for (NodeId v = 0; v < b.node_count(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  // Same node count makes an induced embedding a bijection.
  return detail::InducedMatcher(a, b).run(a.has_anchor()).has_value();
}

/// Definition-1 frequency: the number of target nodes the query anchor
/// can map to. The target's own anchor, if any, is ignored.
inline std::size_t anchored_frequency(const Graph& query, const Graph& target) {
  if (!query.has_anchor())
    throw std::invalid_argument("anchored_frequency requires an anchored query");
  if (!query.connected())
    throw std::invalid_argument("anchored_frequency requires a connected query");
  std::size_t qdeg = query.degree(query.anchor());
  std::size_t count = 0;
  for (NodeId u = 0; u < target.node_count(); ++u) {
    if (target.degree(u) < qdeg) continue;
    Graph anchored = target.with_anchor(u);
    if (is_anchored_subgraph(query, anchored)) ++count;
  }
  return count;
}

/// Definition-2 frequency: distinct node subsets of the target inducing
/// a copy of the query. Exponential worst case; guarded by `budget`
/// explored subsets.
inline std::size_t graph_level_frequency(const Graph& query, const Graph& target,
                                         std::size_t budget = 50'000'000) {
  if (!query.connected())
    throw std::invalid_argument("graph_level_frequency requires a connected query");
  if (query.node_count() == 0) return 0;
  // A connected query's image induces a connected graph, so ESU over
  // connected subsets is exhaustive here.
  std::size_t count = 0;
  for_each_connected_subset(target, query.node_count(), budget,
                            [&](const std::vector<NodeId>& subset) {
                              Graph sub = target.induced(subset).without_anchor();
                              if (sub.edge_count() != query.edge_count()) return;
                              if (is_induced_subgraph(query, sub)) ++count;
                            });
  return count;
}

}  // namespace motifforge
