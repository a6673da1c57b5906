#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "motifforge/graph.hpp"

namespace motifforge {

// Edge-list text format:
//   n <node_count>
//   anchor <id>        (optional)
//   u v                (one edge per line, 0-based)
// '#' starts a comment; blank lines are ignored.

inline Graph read_edge_list(std::istream& in) {
  std::size_t node_count = 0;
  bool have_n = false;
  std::optional<NodeId> anchor;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "n") {
      if (!(ls >> node_count)) throw std::runtime_error("bad node count line");
      have_n = true;
    } else if (tok == "anchor") {
      NodeId a;
      if (!(ls >> a)) throw std::runtime_error("bad anchor line");
      anchor = a;
    } else {
      NodeId u = 0, v = 0;
      std::istringstream es(line);
      if (!(es >> u >> v)) throw std::runtime_error("bad edge line: " + line);
      edges.emplace_back(u, v);
    }
  }
  if (!have_n) throw std::runtime_error("missing 'n <node_count>' header");
  return Graph(node_count, std::move(edges), anchor);
}

inline Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.node_count() << "\n";
  if (g.has_anchor()) out << "anchor " << g.anchor() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
}

/// Reads every *.edgelist file in `dir`; lexicographic filename order
/// defines graph ids.
inline std::vector<Graph> read_dataset_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".edgelist")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<Graph> graphs;
  graphs.reserve(files.size());
  for (const auto& f : files) graphs.push_back(read_edge_list(f));
  return graphs;
}

inline void write_dataset_dir(const std::filesystem::path& dir,
                              const std::vector<Graph>& graphs,
                              const std::string& prefix = "graph") {
  std::filesystem::create_directories(dir);
  int width = 1;
  for (std::size_t n = graphs.size(); n > 10; n /= 10) ++width;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::ostringstream name;
    name << prefix << "_";
    name.width(width);
    name.fill('0');
    name << i;
    write_edge_list(dir / (name.str() + ".edgelist"), graphs[i]);
  }
}

}  // namespace motifforge
