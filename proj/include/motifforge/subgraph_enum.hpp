#pragma once

#include <cstdint>
#include <vector>

#include "motifforge/errors.hpp"
#include "motifforge/graph.hpp"

namespace motifforge {

/// Descends into every child at every ESU tree level.
struct EsuSelectAll {
  void operator()(std::size_t /*level*/, std::vector<std::uint8_t>& pick) const {
    std::fill(pick.begin(), pick.end(), std::uint8_t{1});
  }
};

namespace detail {

// Wernicke's ESU tree. Each connected k-subset is reached by exactly one
// root-to-leaf path; `select` decides which children to descend into at
// each level (level = size of the subgraph being formed, 1-based), which
// is what Rand-ESU hooks into.
template <typename Emit, typename Select>
class EsuWalker {
 public:
  EsuWalker(const Graph& g, std::size_t k, std::size_t budget, Emit& emit,
            Select& select)
      : g_(g), k_(k), budget_(budget), emit_(emit), select_(select),
        mark_(g.node_count(), false) {}

  void run() {
    if (k_ == 0 || g_.node_count() == 0) return;
    std::vector<std::uint8_t> pick(g_.node_count());
    select_(1, pick);
    for (NodeId v = 0; v < g_.node_count(); ++v) {
      if (!pick[v]) continue;
      spend();
      root_ = v;
      sub_.assign(1, v);
      if (k_ == 1) {
        emit_(sub_);
        continue;
      }
      mark_[v] = true;
      std::vector<NodeId> ext;
      for (NodeId u : g_.neighbors(v))
        if (u > v) {
          ext.push_back(u);
          mark_[u] = true;
        }
      extend(ext);
      mark_[v] = false;
      for (NodeId u : ext) mark_[u] = false;
    }
  }

 private:
  void spend() {
    if (budget_ == 0)
      throw BudgetError("subset exploration budget exhausted");
    --budget_;
  }

  void extend(const std::vector<NodeId>& ext) {
    if (sub_.size() == k_) {
      emit_(sub_);
      return;
    }
    if (ext.empty()) return;
    std::vector<std::uint8_t> pick(ext.size());
    select_(sub_.size() + 1, pick);
    std::vector<NodeId> added;
    for (std::size_t i = 0; i < ext.size(); ++i) {
      if (!pick[i]) continue;
      spend();
      NodeId w = ext[i];
      added.clear();
      for (NodeId u : g_.neighbors(w))
        if (u > root_ && !mark_[u]) {
          mark_[u] = true;
          added.push_back(u);
        }
      std::vector<NodeId> child_ext(ext.begin() + i + 1, ext.end());
      child_ext.insert(child_ext.end(), added.begin(), added.end());
      sub_.push_back(w);
      extend(child_ext);
      sub_.pop_back();
      for (NodeId u : added) mark_[u] = false;
    }
  }

  const Graph& g_;
  std::size_t k_;
  std::size_t budget_;
  Emit& emit_;
  Select& select_;
  std::vector<bool> mark_;
  std::vector<NodeId> sub_;
  NodeId root_ = 0;
};

}  // namespace detail

/// Runs ESU over `g`; `emit` receives each connected k-subset once, root
/// node first. Throws BudgetError when the tree exceeds `budget` nodes.
template <typename Emit, typename Select = EsuSelectAll>
void esu_enumerate(const Graph& g, std::size_t k, std::size_t budget,
                   Emit&& emit, Select&& select = {}) {
  detail::EsuWalker<std::remove_reference_t<Emit>,
                    std::remove_reference_t<Select>>(g, k, budget, emit, select)
      .run();
}

template <typename Emit>
void for_each_connected_subset(const Graph& g, std::size_t k,
                               std::size_t budget, Emit&& emit) {
  esu_enumerate(g, k, budget, std::forward<Emit>(emit));
}

}  // namespace motifforge
