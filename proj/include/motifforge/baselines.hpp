#pragma once

#include <cmath>
#include <vector>

#include "motifforge/motif_table.hpp"
#include "motifforge/neighborhood.hpp"
#include "motifforge/rng.hpp"
#include "motifforge/subgraph_enum.hpp"

namespace motifforge {

/// Full ESU enumeration of connected size-k subsets, grouped by
/// canonical key. Graph-level counts always; anchored mode additionally
/// tracks Definition-1 frequencies per anchor orbit.
inline MotifTable enumerate_exact(const Graph& target, std::size_t k,
                                  bool anchored, std::size_t size_guard = 7,
                                  std::size_t budget = 500'000'000) {
  if (k > size_guard)
    throw BudgetError("exact enumeration guard: k exceeds " +
                      std::to_string(size_guard));
  MotifTable table;
  std::vector<NodeId> nodes;
  esu_enumerate(target, k, budget, [&](const std::vector<NodeId>& sub) {
    nodes.assign(sub.begin(), sub.end());
    std::sort(nodes.begin(), nodes.end());
    Graph ind = target.induced(nodes).without_anchor();
    auto& entry = table.entry_for(ind);
    entry.count += 1;
    entry.weight += 1;
    if (anchored) {
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto& orbit =
            table.orbit_for(entry, ind.with_anchor(static_cast<NodeId>(i)));
        orbit.distinct.insert(nodes[i]);
      }
    }
  });
  table.finalize_distinct();
  return table;
}

/// MFinder sampling: repeated weighted growth to exactly k nodes, every
/// sample weighted equally; the growth seed is the anchor in anchored
/// mode. Growths that stall below k nodes are dropped.
inline MotifTable mine_mfinder(const Graph& target, std::size_t k,
                               std::size_t samples, Rng& rng,
                               bool anchored = true) {
  MotifTable table;
  for (std::size_t s = 0; s < samples; ++s) {
    ExtractedSubgraph sub = sample_weighted_neighborhood(target, rng, k);
    if (sub.graph.node_count() < k) continue;
    auto& entry = table.entry_for(sub.graph);
    entry.count += 1;
    entry.weight += 1;
    if (anchored) table.orbit_for(entry, sub.graph).count += 1;
  }
  return table;
}

namespace detail {

// Child selection for Rand-ESU: keep a stochastically rounded
// proportion p of the children, chosen uniformly without replacement.
class ProportionalSelect {
 public:
  ProportionalSelect(std::vector<double> level_probs, Rng& rng)
      : probs_(std::move(level_probs)), rng_(rng) {}

  void operator()(std::size_t level, std::vector<std::uint8_t>& pick) {
    double p = probs_[level - 1];
    if (p >= 1.0) {
      std::fill(pick.begin(), pick.end(), std::uint8_t{1});
      return;
    }
    std::size_t m = pick.size();
    double want = p * static_cast<double>(m);
    std::size_t count = static_cast<std::size_t>(want);
    if (bernoulli(rng_, want - static_cast<double>(count))) ++count;
    std::fill(pick.begin(), pick.end(), std::uint8_t{0});
    if (count == 0) return;
    // Partial Fisher-Yates over the index range.
    idx_.resize(m);
    for (std::size_t i = 0; i < m; ++i) idx_[i] = i;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t j = i + uniform_index(rng_, m - i);
      std::swap(idx_[i], idx_[j]);
      pick[idx_[i]] = 1;
    }
  }

 private:
  std::vector<double> probs_;
  Rng& rng_;
  std::vector<std::size_t> idx_;
};

}  // namespace detail

/// Rand-ESU with level expansion probabilities p_i = (1 - i/(k+1))^tau.
/// Leaves carry inverse-probability weights, so `weight` estimates the
/// exact graph-level count. tau = 0 evaluates every p_i = 1 and
/// reproduces enumerate_exact bit-exactly.
inline MotifTable mine_rand_esu(const Graph& target, std::size_t k, double tau,
                                Rng& rng, std::size_t budget = 500'000'000) {
  if (tau < 0) throw std::invalid_argument("tau must be >= 0");
  std::vector<double> probs(k);
  double leaf_weight = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    double p = tau == 0.0
                   ? 1.0
                   : std::pow(1.0 - static_cast<double>(i) / static_cast<double>(k + 1),
                              tau);
    probs[i - 1] = p;
    leaf_weight /= p;
  }
  MotifTable table;
  detail::ProportionalSelect select(probs, rng);
  std::vector<NodeId> nodes;
  esu_enumerate(
      target, k, budget,
      [&](const std::vector<NodeId>& sub) {
        nodes.assign(sub.begin(), sub.end());
        std::sort(nodes.begin(), nodes.end());
        Graph ind = target.induced(nodes).without_anchor();
        auto& entry = table.entry_for(ind);
        entry.count += 1;
        entry.weight += leaf_weight;
      },
      select);
  return table;
}

}  // namespace motifforge
