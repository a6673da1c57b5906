#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "motifforge/graph.hpp"
#include "motifforge/rng.hpp"

namespace motifforge {

/// Isomorphism-invariant digest from iterated WL color refinement.
/// Isomorphic anchored graphs always collide; non-isomorphic ones may
/// (rarely), so de-duplication paths confirm groups with
/// exact_isomorphic when sizes permit.
struct CanonicalKey {
  std::uint64_t digest = 0;
  std::uint32_t round_count = 0;

  auto operator<=>(const CanonicalKey&) const = default;
};

namespace detail {

inline std::uint64_t fold(std::uint64_t h, std::uint64_t v) {
  return mix_seed(h ^ (v + 0x9e3779b97f4a7c15ULL));
}

}  // namespace detail

/// WL refinement with initial colors (anchor flag, degree), refined for
/// max(node_count, 3) rounds; the digest hashes the sorted color
/// multiset of every round.
inline CanonicalKey canonical_key(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::uint32_t rounds = static_cast<std::uint32_t>(std::max<std::size_t>(n, 3));
  std::uint64_t h = detail::fold(detail::fold(0x6d6f746966ULL, n), g.edge_count());
  if (n == 0) return {h, rounds};

  // Round 0: dense ids from sorted (anchor flag, degree) pairs.
  std::vector<std::uint64_t> colors(n);
  {
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> palette;
    for (NodeId v = 0; v < n; ++v) {
      std::uint64_t flag = g.has_anchor() && g.anchor() == v ? 1 : 0;
      palette.emplace(std::make_pair(flag, g.degree(v)), 0);
    }
    std::uint64_t next = 0;
    for (auto& [sig, id] : palette) id = next++;
    for (NodeId v = 0; v < n; ++v) {
      std::uint64_t flag = g.has_anchor() && g.anchor() == v ? 1 : 0;
      colors[v] = palette.at({flag, g.degree(v)});
    }
  }

  std::vector<std::uint64_t> next_colors(n);
  for (std::uint32_t round = 0;; ++round) {
    // Fold this round's color multiset into the digest.
    std::vector<std::uint64_t> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    h = detail::fold(h, round);
    for (std::uint64_t c : sorted) h = detail::fold(h, c);
    if (round == rounds) break;

    std::map<std::vector<std::uint64_t>, std::uint64_t> palette;
    std::vector<std::vector<std::uint64_t>> sigs(n);
    for (NodeId v = 0; v < n; ++v) {
      auto& sig = sigs[v];
      sig.push_back(colors[v]);
      for (NodeId u : g.neighbors(v)) sig.push_back(colors[u]);
      std::sort(sig.begin() + 1, sig.end());
      palette.emplace(sig, 0);
    }
    std::uint64_t next = 0;
    for (auto& [sig, id] : palette) id = next++;
    for (NodeId v = 0; v < n; ++v) next_colors[v] = palette.at(sigs[v]);
    colors.swap(next_colors);
  }
  return {h, rounds};
}

}  // namespace motifforge
