#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "motifforge/canonical.hpp"
#include "motifforge/errors.hpp"
#include "motifforge/graph.hpp"
#include "motifforge/isomorphism.hpp"

namespace motifforge {

/// The constructive perfect order embedding: one coordinate per
/// non-isomorphic connected anchored graph of size <= reference_size,
/// holding the exact count of that reference inside the embedded graph
/// (subsets through the graph's anchor, anchor mapped to anchor).
///
/// Satisfies z(Q) <= z(G) elementwise iff Q is an anchored subgraph of
/// G, for connected anchored graphs up to the reference size.
class PerfectEmbedding {
 public:
  explicit PerfectEmbedding(std::size_t reference_size)
      : reference_size_(reference_size) {
    if (reference_size < 1 || reference_size > 5)
      throw BudgetError("perfect embedding reference size must be in 1..5");
    for (std::size_t s = 1; s <= reference_size; ++s)
      for (const Graph& g : connected_graphs_of_size(s))
        for (NodeId a = 0; a < g.node_count(); ++a) add_reference(g.with_anchor(a));
  }

  std::size_t dimension() const { return references_.size(); }
  const std::vector<Graph>& references() const { return references_; }

  /// Exact count vector for an anchored graph.
  std::vector<std::int64_t> embed(const Graph& g) const {
    if (!g.has_anchor())
      throw std::invalid_argument("perfect embedding requires an anchored graph");
    std::vector<std::int64_t> z(references_.size(), 0);
    std::vector<NodeId> subset;
    for (std::size_t s = 1; s <= std::min(reference_size_, g.node_count()); ++s)
      count_subsets(g, s, subset, z);
    return z;
  }

  static bool dominates(const std::vector<std::int64_t>& hi,
                        const std::vector<std::int64_t>& lo) {
    for (std::size_t i = 0; i < hi.size(); ++i)
      if (lo[i] > hi[i]) return false;
    return true;
  }

 private:
  // All connected unanchored graphs of size s, one per isomorphism
  // class, by exhausting edge subsets.
  static std::vector<Graph> connected_graphs_of_size(std::size_t s) {
    std::vector<std::pair<NodeId, NodeId>> slots;
    for (NodeId u = 0; u < s; ++u)
      for (NodeId v = u + 1; v < s; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
      std::vector<std::pair<NodeId, NodeId>> edges;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask & (1ULL << b)) edges.push_back(slots[b]);
      Graph g(s, std::move(edges));
      if (!g.connected()) continue;
      bool dup = false;
      for (const Graph& seen : out)
        if (exact_isomorphic(seen, g)) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(std::move(g));
    }
    return out;
  }

  void add_reference(const Graph& anchored) {
    CanonicalKey key = canonical_key(anchored);
    auto [it, fresh] = by_key_.try_emplace(key, std::vector<std::size_t>{});
    for (std::size_t idx : it->second)
      if (exact_isomorphic(references_[idx], anchored)) return;
    it->second.push_back(references_.size());
    references_.push_back(anchored);
  }

  // Counts, for every reference of size s, the subsets of g of that size
  // that contain g's anchor and induce the reference (anchor to anchor).
  void count_subsets(const Graph& g, std::size_t s, std::vector<NodeId>& subset,
                     std::vector<std::int64_t>& z) const {
    const NodeId anchor = g.anchor();
    std::vector<NodeId> pool;
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (v != anchor) pool.push_back(v);
    if (s - 1 > pool.size()) return;
    std::vector<std::size_t> comb(s - 1);
    for (std::size_t i = 0; i + 1 < s; ++i) comb[i] = i;
    while (true) {
      subset.assign(1, anchor);
      for (std::size_t i = 0; i + 1 < s; ++i) subset.push_back(pool[comb[i]]);
      Graph ind = g.induced(subset);  // anchor lands at node 0
      if (ind.connected()) {
        CanonicalKey key = canonical_key(ind);
        auto it = by_key_.find(key);
        if (it != by_key_.end())
          for (std::size_t idx : it->second)
            if (exact_isomorphic(references_[idx], ind)) {
              ++z[idx];
              break;
            }
      }
      if (s == 1) break;  // single subset: the anchor alone
      std::size_t i = comb.size();
      while (i > 0 && comb[i - 1] == pool.size() - comb.size() + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  std::size_t reference_size_;
  std::vector<Graph> references_;
  std::map<CanonicalKey, std::vector<std::size_t>> by_key_;
};

/// Elementwise minimum; dominates the embedding of any common anchored
/// subgraph of the two inputs.
template <typename T>
std::vector<T> intersection_lower_bound(const std::vector<T>& a,
                                        const std::vector<T>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dimension mismatch");
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

}  // namespace motifforge
