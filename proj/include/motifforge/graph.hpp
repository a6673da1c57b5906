#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace motifforge {

using NodeId = std::uint32_t;

constexpr NodeId kNoNode = static_cast<NodeId>(-1);

/// Undirected simple graph over node ids 0..n-1 with an optional anchor
/// node. Immutable after construction; neighbor lists are kept sorted.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t node_count,
                 std::vector<std::pair<NodeId, NodeId>> edges = {},
                 std::optional<NodeId> anchor = std::nullopt)
      : adj_(node_count) {
    for (const auto& [u, v] : edges) add_edge_internal(u, v);
    for (auto& nbrs : adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    edge_count_ = 0;
    for (const auto& nbrs : adj_) edge_count_ += nbrs.size();
    edge_count_ /= 2;
    if (anchor) set_anchor(*anchor);
  }

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
  std::size_t degree(NodeId v) const { return adj_[v].size(); }

  bool has_edge(NodeId u, NodeId v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    NodeId other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nbrs.begin(), nbrs.end(), other);
  }

  bool has_anchor() const { return anchor_ != kNoNode; }
  NodeId anchor() const {
    if (!has_anchor()) throw std::logic_error("graph has no anchor");
    return anchor_;
  }

  void set_anchor(NodeId v) {
    if (v >= adj_.size()) throw std::out_of_range("anchor out of range");
    anchor_ = v;
  }
  void clear_anchor() { anchor_ = kNoNode; }

  Graph with_anchor(NodeId v) const {
    Graph g = *this;
    g.set_anchor(v);
    return g;
  }

  Graph without_anchor() const {
    Graph g = *this;
    g.clear_anchor();
    return g;
  }

  std::vector<std::pair<NodeId, NodeId>> edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adj_.size(); ++u)
      for (NodeId v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Node-induced subgraph on `nodes`; ids renumbered to 0..|nodes|-1 in
  /// the given order. The anchor carries over only if it is in `nodes`.
  Graph induced(const std::vector<NodeId>& nodes) const {
    std::vector<NodeId> back(adj_.size(), kNoNode);
    for (std::size_t i = 0; i < nodes.size(); ++i) back[nodes[i]] = static_cast<NodeId>(i);
    std::vector<std::pair<NodeId, NodeId>> es;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (NodeId v : adj_[nodes[i]]) {
        NodeId j = back[v];
        if (j != kNoNode && static_cast<NodeId>(i) < j)
          es.emplace_back(static_cast<NodeId>(i), j);
      }
    std::optional<NodeId> a;
    if (has_anchor() && back[anchor_] != kNoNode) a = back[anchor_];
    return Graph(nodes.size(), std::move(es), a);
  }

  /// BFS distances from `src`; unreachable nodes get kUnreached.
  static constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> bfs_distances(NodeId src) const {
    std::vector<std::uint32_t> dist(adj_.size(), kUnreached);
    std::queue<NodeId> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      for (NodeId v : adj_[u])
        if (dist[v] == kUnreached) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }
    return dist;
  }

  bool connected() const {
    if (adj_.empty()) return true;
    auto dist = bfs_distances(0);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::uint32_t d) { return d == kUnreached; });
  }

  /// Component id per node, ids assigned in order of lowest member node.
  std::vector<std::uint32_t> component_ids() const {
    std::vector<std::uint32_t> comp(adj_.size(), kUnreached);
    std::uint32_t next = 0;
    for (NodeId s = 0; s < adj_.size(); ++s) {
      if (comp[s] != kUnreached) continue;
      comp[s] = next;
      std::queue<NodeId> q;
      q.push(s);
      while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId v : adj_[u])
          if (comp[v] == kUnreached) {
            comp[v] = next;
            q.push(v);
          }
      }
      ++next;
    }
    return comp;
  }

  bool operator==(const Graph& other) const {
    return adj_ == other.adj_ && anchor_ == other.anchor_;
  }

 private:
  void add_edge_internal(NodeId u, NodeId v) {
    if (u >= adj_.size() || v >= adj_.size())
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  std::vector<std::vector<NodeId>> adj_;
  std::size_t edge_count_ = 0;
  NodeId anchor_ = kNoNode;
};

/// Disjoint union of graphs; node ids are shifted per component in order.
inline Graph disjoint_union(const std::vector<Graph>& graphs) {
  std::size_t n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const Graph& g : graphs) {
    for (auto [u, v] : g.edges())
      edges.emplace_back(static_cast<NodeId>(u + n), static_cast<NodeId>(v + n));
    n += g.node_count();
  }
  return Graph(n, std::move(edges));
}

}  // namespace motifforge
