#pragma once

#include <ostream>
#include <vector>

#include "motifforge/graph.hpp"
#include "motifforge/motif_table.hpp"

namespace motifforge {

struct GraphStatistics {
  double density = 0;      // 2m / n(n-1)
  double diameter = 0;     // largest component
  double avg_path = 0;     // mean shortest path, largest component
  double clustering = 0;   // mean local clustering over all nodes
};

inline GraphStatistics dataset_statistics(const Graph& g) {
  GraphStatistics s;
  const std::size_t n = g.node_count();
  if (n >= 2)
    s.density = 2.0 * static_cast<double>(g.edge_count()) /
                (static_cast<double>(n) * static_cast<double>(n - 1));

  // Largest component (ties: lowest component id).
  auto comp = g.component_ids();
  std::uint32_t comp_count = 0;
  for (auto c : comp) comp_count = std::max(comp_count, c + 1);
  std::vector<std::size_t> sizes(comp_count, 0);
  for (auto c : comp) ++sizes[c];
  std::uint32_t largest = 0;
  for (std::uint32_t c = 0; c < comp_count; ++c)
    if (sizes[c] > sizes[largest]) largest = c;

  std::size_t pairs = 0;
  double path_sum = 0;
  std::uint32_t diameter = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (comp[v] != largest) continue;
    auto dist = g.bfs_distances(v);
    for (NodeId u = 0; u < n; ++u) {
      if (u == v || comp[u] != largest) continue;
      path_sum += dist[u];
      diameter = std::max(diameter, dist[u]);
      ++pairs;
    }
  }
  s.diameter = diameter;
  s.avg_path = pairs ? path_sum / static_cast<double>(pairs) : 0.0;

  double clust_sum = 0;
  for (NodeId v = 0; v < n; ++v) {
    std::size_t deg = g.degree(v);
    if (deg < 2) continue;
    std::size_t closed = 0;
    const auto& nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (g.has_edge(nbrs[i], nbrs[j])) ++closed;
    clust_sum += 2.0 * static_cast<double>(closed) /
                 (static_cast<double>(deg) * static_cast<double>(deg - 1));
  }
  s.clustering = n ? clust_sum / static_cast<double>(n) : 0.0;
  return s;
}

inline void write_statistics_csv(std::ostream& out,
                                 const std::vector<Graph>& dataset) {
  out << "graph_id,density,diameter,avg_path,clustering\n";
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    GraphStatistics s = dataset_statistics(dataset[i]);
    out << i << "," << format_count(s.density) << "," << format_count(s.diameter)
        << "," << format_count(s.avg_path) << "," << format_count(s.clustering)
        << "\n";
  }
}

}  // namespace motifforge
