#pragma once

#include <cmath>
#include <set>
#include <string>

#include "motifforge/graph.hpp"
#include "motifforge/rng.hpp"

namespace motifforge {

enum class GraphFamily {
  erdos_renyi,
  extended_barabasi_albert,
  power_law_cluster,
  watts_strogatz,
};

inline const char* family_name(GraphFamily f) {
  switch (f) {
    case GraphFamily::erdos_renyi: return "er";
    case GraphFamily::extended_barabasi_albert: return "xba";
    case GraphFamily::power_law_cluster: return "plc";
    case GraphFamily::watts_strogatz: return "ws";
  }
  return "?";
}

inline GraphFamily family_from_name(const std::string& name) {
  if (name == "er") return GraphFamily::erdos_renyi;
  if (name == "xba") return GraphFamily::extended_barabasi_albert;
  if (name == "plc") return GraphFamily::power_law_cluster;
  if (name == "ws") return GraphFamily::watts_strogatz;
  throw std::invalid_argument("unknown graph family: " + name);
}

struct GeneratorConfig {
  GraphFamily family = GraphFamily::erdos_renyi;
  std::size_t min_size = 2;
  std::size_t max_size = 29;
  std::uint64_t seed = 0;
};

namespace detail {

// Degree-smoothed preferential pick: P(v) proportional to degree(v)+1.
inline NodeId preferential_pick(const std::vector<std::set<NodeId>>& adj,
                                std::size_t total_degree, Rng& rng) {
  std::uint64_t r = uniform_u64(rng, 0, total_degree + adj.size() - 1);
  for (NodeId v = 0;; ++v) {
    std::uint64_t w = adj[v].size() + 1;
    if (r < w) return v;
    r -= w;
  }
}

inline Graph to_graph(const std::vector<std::set<NodeId>>& adj) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < adj.size(); ++u)
    for (NodeId v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return Graph(adj.size(), std::move(edges));
}

}  // namespace detail

inline Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Albert-Barabasi extended model: grow from m isolated nodes; each step
/// adds m preferential edges (prob p), rewires m edges (prob q), or adds
/// a new node with m preferential links (otherwise). Requires p + q < 1.
inline Graph extended_barabasi_albert(std::size_t n, std::size_t m, double p,
                                      double q, Rng& rng) {
  if (m < 1 || m >= n) throw std::invalid_argument("need 1 <= m < n");
  if (p + q >= 1) throw std::invalid_argument("need p + q < 1");
  std::vector<std::set<NodeId>> adj(m);
  std::size_t total_degree = 0;
  std::size_t node_count = m;
  auto add_edge = [&](NodeId u, NodeId v) {
    adj[u].insert(v);
    adj[v].insert(u);
    total_degree += 2;
  };
  while (node_count < n) {
    double roll = uniform_real(rng);
    if (roll < p) {
      // m new internal edges: uniform source, preferential destination.
      for (std::size_t i = 0; i < m; ++i) {
        NodeId u = static_cast<NodeId>(uniform_index(rng, node_count));
        if (adj[u].size() >= node_count - 1) continue;  // saturated
        for (int attempt = 0; attempt < 32; ++attempt) {
          NodeId v = detail::preferential_pick(adj, total_degree, rng);
          if (v != u && !adj[u].count(v)) {
            add_edge(u, v);
            break;
          }
        }
      }
    } else if (roll < p + q) {
      // m rewires: drop a random incident edge, reattach preferentially.
      for (std::size_t i = 0; i < m; ++i) {
        NodeId u = static_cast<NodeId>(uniform_index(rng, node_count));
        if (adj[u].empty() || adj[u].size() >= node_count - 1) continue;
        std::size_t pick = uniform_index(rng, adj[u].size());
        auto it = adj[u].begin();
        std::advance(it, pick);
        NodeId old = *it;
        for (int attempt = 0; attempt < 32; ++attempt) {
          NodeId v = detail::preferential_pick(adj, total_degree, rng);
          if (v != u && v != old && !adj[u].count(v)) {
            adj[u].erase(old);
            adj[old].erase(u);
            total_degree -= 2;
            add_edge(u, v);
            break;
          }
        }
      }
    } else {
      // New node with m preferential links.
      adj.emplace_back();
      NodeId fresh = static_cast<NodeId>(node_count++);
      for (std::size_t i = 0; i < m && i < node_count - 1; ++i) {
        for (int attempt = 0; attempt < 32; ++attempt) {
          NodeId v = detail::preferential_pick(adj, total_degree, rng);
          if (v != fresh && !adj[fresh].count(v)) {
            add_edge(fresh, v);
            break;
          }
        }
      }
    }
  }
  return detail::to_graph(adj);
}

/// Holme-Kim model: preferential attachment where each of the m links
/// closes a triangle with probability `triangle_p`.
inline Graph power_law_cluster(std::size_t n, std::size_t m, double triangle_p,
                               Rng& rng) {
  if (m < 1 || m >= n) throw std::invalid_argument("need 1 <= m < n");
  std::vector<std::set<NodeId>> adj(m);
  std::size_t total_degree = 0;
  auto add_edge = [&](NodeId u, NodeId v) {
    adj[u].insert(v);
    adj[v].insert(u);
    total_degree += 2;
  };
  for (NodeId fresh = static_cast<NodeId>(m); fresh < n; ++fresh) {
    adj.emplace_back();
    NodeId hub = kNoNode;
    std::size_t made = 0;
    while (made < m) {
      bool closed = false;
      if (hub != kNoNode && bernoulli(rng, triangle_p)) {
        // Triangle step: link to a neighbor of the last attachment.
        std::vector<NodeId> candidates;
        for (NodeId u : adj[hub])
          if (u != fresh && !adj[fresh].count(u)) candidates.push_back(u);
        if (!candidates.empty()) {
          NodeId u = candidates[uniform_index(rng, candidates.size())];
          add_edge(fresh, u);
          ++made;
          closed = true;
        }
      }
      if (!closed) {
        bool attached = false;
        for (int attempt = 0; attempt < 32; ++attempt) {
          NodeId v = detail::preferential_pick(adj, total_degree, rng);
          if (v != fresh && !adj[fresh].count(v)) {
            add_edge(fresh, v);
            hub = v;
            ++made;
            attached = true;
            break;
          }
        }
        if (!attached) break;  // everything reachable already linked
      }
    }
  }
  return detail::to_graph(adj);
}

/// Watts-Strogatz ring lattice (k/2 neighbors per side) with edge
/// rewiring probability `rewire_p`.
inline Graph watts_strogatz(std::size_t n, std::size_t k, double rewire_p,
                            Rng& rng) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  k = std::min(k, n - 1);
  std::vector<std::set<NodeId>> adj(n);
  std::size_t total_degree = 0;
  auto add_edge = [&](NodeId u, NodeId v) {
    adj[u].insert(v);
    adj[v].insert(u);
    total_degree += 2;
  };
  for (std::size_t j = 1; j <= k / 2; ++j)
    for (NodeId u = 0; u < n; ++u) {
      NodeId v = static_cast<NodeId>((u + j) % n);
      if (!adj[u].count(v)) add_edge(u, v);
    }
  for (std::size_t j = 1; j <= k / 2; ++j)
    for (NodeId u = 0; u < n; ++u) {
      NodeId v = static_cast<NodeId>((u + j) % n);
      if (!adj[u].count(v)) continue;
      if (!bernoulli(rng, rewire_p)) continue;
      if (adj[u].size() >= n - 1) continue;
      NodeId w;
      do {
        w = static_cast<NodeId>(uniform_index(rng, n));
      } while (w == u || adj[u].count(w));
      adj[u].erase(v);
      adj[v].erase(u);
      add_edge(u, w);
    }
  return detail::to_graph(adj);
}

inline GraphFamily sample_family(Rng& rng) {
  return static_cast<GraphFamily>(uniform_u64(rng, 0, 3));
}

/// One graph of size n with parameters drawn from the family priors:
///   ER    p ~ Beta(1.3, 1.3 n / log2 n - 1.3)
///   XBA   m ~ Unif{1..floor(2 log2 n)}, p,q ~ Exp(rate 20) capped 0.2
///   PLC   m ~ Unif{1..floor(2 log2 n)}, triangle p ~ Unif(0, 0.5)
///   WS    k ~ n Beta(1.3, 1.3 n / log2 n - 1.3) rounded (min 2),
///         rewire p ~ Beta(2, 2)
inline Graph generate_with_priors(GraphFamily family, std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("generator needs n >= 2");
  const double log2n = std::log2(static_cast<double>(n));
  const double beta_b = 1.3 * static_cast<double>(n) / log2n - 1.3;
  auto draw_m = [&]() {
    auto hi = static_cast<std::uint64_t>(std::floor(2.0 * log2n));
    hi = std::min<std::uint64_t>(std::max<std::uint64_t>(hi, 1), n - 1);
    return static_cast<std::size_t>(uniform_u64(rng, 1, hi));
  };
  switch (family) {
    case GraphFamily::erdos_renyi:
      return erdos_renyi(n, sample_beta(rng, 1.3, beta_b), rng);
    case GraphFamily::extended_barabasi_albert: {
      std::size_t m = draw_m();
      double p = std::min(0.2, sample_exponential(rng, 20.0));
      double q = std::min(0.2, sample_exponential(rng, 20.0));
      return extended_barabasi_albert(n, m, p, q, rng);
    }
    case GraphFamily::power_law_cluster:
      return power_law_cluster(n, draw_m(), uniform_real(rng, 0.0, 0.5), rng);
    case GraphFamily::watts_strogatz: {
      double raw = static_cast<double>(n) * sample_beta(rng, 1.3, beta_b);
      auto k = static_cast<std::size_t>(std::lround(raw));
      k = std::max<std::size_t>(k, 2);
      return watts_strogatz(n, k, sample_beta(rng, 2.0, 2.0), rng);
    }
  }
  throw std::logic_error("unreachable");
}

inline Graph generate(const GeneratorConfig& config, std::size_t n, Rng& rng) {
  if (n < config.min_size || n > config.max_size)
    throw std::invalid_argument("n outside the configured size range");
  return generate_with_priors(config.family, n, rng);
}

}  // namespace motifforge
