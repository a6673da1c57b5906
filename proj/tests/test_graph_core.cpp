#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <set>
#include <sstream>

#include "motifforge/canonical.hpp"
#include "motifforge/graph.hpp"
#include "motifforge/graph_io.hpp"
#include "motifforge/isomorphism.hpp"
#include "motifforge/neighborhood.hpp"
#include "motifforge/oracle.hpp"
#include "motifforge/subgraph_enum.hpp"

#include "test_util.hpp"

using namespace motifforge;
using namespace mftest;

TEST_CASE("graph basics") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.connected());
  CHECK(!g.has_anchor());
  CHECK_THROWS(Graph(2, {{0, 0}}));           // self-loop
  CHECK(Graph(2, {{0, 1}, {1, 0}}).edge_count() == 1);  // parallel collapses

  Graph sub = g.induced({{1, 2}});
  CHECK(sub.node_count() == 2);
  CHECK(sub.has_edge(0, 1));

  Graph two(5, {{0, 1}, {3, 4}});
  CHECK(!two.connected());
  auto comp = two.component_ids();
  CHECK(comp[0] == comp[1]);
  CHECK(comp[3] == comp[4]);
  CHECK(comp[0] != comp[3]);
}

TEST_CASE("edge list io round trip") {
  Graph g = cycle_graph(5).with_anchor(2);
  std::stringstream ss;
  write_edge_list(ss, g);
  Graph back = read_edge_list(ss);
  CHECK(back == g);

  std::stringstream bad("3 4\n");
  CHECK_THROWS(read_edge_list(bad));

  std::stringstream commented("# c\nn 3\nanchor 1\n0 1 # tail\n\n1 2\n");
  Graph c = read_edge_list(commented);
  CHECK(c.node_count() == 3);
  CHECK(c.anchor() == 1);
  CHECK(c.edge_count() == 2);
}

TEST_CASE("one-node query maps to the anchor") {
  Graph q(1, {}, 0);
  Rng rng = make_rng(7);
  for (int i = 0; i < 20; ++i) {
    Graph t = er_graph(6, 0.4, rng).with_anchor(
        static_cast<NodeId>(uniform_index(rng, 6)));
    auto m = is_anchored_subgraph(q, t);
    REQUIRE(m.has_value());
    CHECK(m->assignment[0] == t.anchor());
  }
}

TEST_CASE("anchored edge embeds in a triangle") {
  Graph q(2, {{0, 1}}, 0);
  Graph triangle = complete_graph(3);
  for (NodeId a = 0; a < 3; ++a) {
    Graph t = triangle.with_anchor(a);
    CHECK(is_anchored_subgraph(q, t).has_value());
    CHECK(brute_force_anchored_subgraph(q, t));
  }
}

TEST_CASE("triangle does not embed in a path") {
  Graph q = complete_graph(3).with_anchor(0);
  Graph t = path_graph(3).with_anchor(1);  // center
  CHECK(!is_anchored_subgraph(q, t).has_value());
  CHECK(!brute_force_anchored_subgraph(q, t));
}

TEST_CASE("matcher agrees with brute force on random anchored pairs") {
  Rng rng = make_rng(11);
  for (int i = 0; i < 300; ++i) {
    std::size_t nq = 2 + uniform_index(rng, 4);  // 2..5
    std::size_t nt = nq + uniform_index(rng, 4);
    Graph q = er_graph(nq, uniform_real(rng), rng)
                  .with_anchor(static_cast<NodeId>(uniform_index(rng, nq)));
    Graph t = er_graph(nt, uniform_real(rng), rng)
                  .with_anchor(static_cast<NodeId>(uniform_index(rng, nt)));
    CHECK(is_anchored_subgraph(q, t).has_value() ==
          brute_force_anchored_subgraph(q, t));
  }
}

TEST_CASE("witness mapping is a valid induced embedding") {
  Rng rng = make_rng(13);
  int witnessed = 0;
  for (int i = 0; i < 200; ++i) {
    Graph q = er_graph(4, 0.5, rng).with_anchor(0);
    Graph t = er_graph(8, 0.5, rng).with_anchor(
        static_cast<NodeId>(uniform_index(rng, 8)));
    auto m = is_anchored_subgraph(q, t);
    if (!m) continue;
    ++witnessed;
    CHECK(m->assignment[q.anchor()] == t.anchor());
    std::set<NodeId> image(m->assignment.begin(), m->assignment.end());
    CHECK(image.size() == q.node_count());  // injective
    for (NodeId u = 0; u < q.node_count(); ++u)
      for (NodeId v = u + 1; v < q.node_count(); ++v)
        CHECK(q.has_edge(u, v) ==
              t.has_edge(m->assignment[u], m->assignment[v]));
  }
  CHECK(witnessed > 10);
}

TEST_CASE("anchored frequency on small fixtures") {
  Graph edge(2, {{0, 1}}, 0);
  CHECK(anchored_frequency(edge, complete_graph(3)) == 3);
  CHECK(brute_force_anchored_frequency(edge, complete_graph(3)) == 3);

  // Fig-2 style: 7-node star anchored at the hub, 101-node star target.
  Graph star7 = star_graph(6).with_anchor(0);
  CHECK(anchored_frequency(star7, star_graph(100)) == 1);

  Rng rng = make_rng(3);
  Graph one(1, {}, 0);
  CHECK(anchored_frequency(one, er_graph(9, 0.3, rng)) == 9);

  Graph disconnected(4, {{0, 1}, {2, 3}}, 0);
  CHECK_THROWS(anchored_frequency(disconnected, complete_graph(4)));
}

TEST_CASE("anchored frequency spans disconnected targets") {
  Graph edge(2, {{0, 1}}, 0);
  Graph t = disjoint_union({complete_graph(3), path_graph(2)});
  CHECK(anchored_frequency(edge, t) == 5);
}

TEST_CASE("graph-level frequency on small fixtures") {
  Graph edge(2, {{0, 1}});
  CHECK(graph_level_frequency(edge, complete_graph(3)) == 3);

  // C(hub, 6) law from the star example, at brute-force-able scale.
  Graph star6 = star_graph(6);
  CHECK(graph_level_frequency(star6, star_graph(12)) == 924);   // C(12,6)
  CHECK(graph_level_frequency(star6, star_graph(14)) == 3003);  // C(14,6)

  Rng rng = make_rng(5);
  Graph g = er_graph(7, 0.5, rng);
  if (!g.connected()) g = complete_graph(4);
  CHECK(graph_level_frequency(g, g) == 1);  // query == target

  CHECK_THROWS_AS(graph_level_frequency(edge, complete_graph(30), 10),
                  BudgetError);
}

TEST_CASE("exact isomorphism") {
  Rng rng = make_rng(19);
  Graph g = er_graph(6, 0.5, rng);
  CHECK(exact_isomorphic(g, g));
  CHECK(!exact_isomorphic(complete_graph(3), path_graph(3)));
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + uniform_index(rng, 6);  // up to 7
    Graph a = er_graph(n, uniform_real(rng), rng);
    if (uniform_real(rng) < 0.5) a.set_anchor(static_cast<NodeId>(uniform_index(rng, n)));
    Graph b = uniform_real(rng) < 0.5 ? permuted(a, rng) : er_graph(n, uniform_real(rng), rng);
    if (a.has_anchor() && !b.has_anchor())
      b.set_anchor(static_cast<NodeId>(uniform_index(rng, n)));
    CHECK(exact_isomorphic(a, b) == brute_isomorphic(a, b));
  }
}

TEST_CASE("canonical key groups isomorphic graphs") {
  // Two differently-labeled triangles.
  Graph t1(3, {{0, 1}, {1, 2}, {0, 2}});
  Graph t2(3, {{2, 0}, {0, 1}, {2, 1}});
  CHECK(canonical_key(t1) == canonical_key(t2));

  // Degree profile separates an edge from a 2-path.
  CHECK(canonical_key(path_graph(2)).digest != canonical_key(path_graph(3)).digest);

  // Anchor flag breaks symmetry between orbits.
  Graph end = path_graph(3).with_anchor(0);
  Graph center = path_graph(3).with_anchor(1);
  CHECK(canonical_key(end).digest != canonical_key(center).digest);
  CHECK(canonical_key(end) == canonical_key(path_graph(3).with_anchor(2)));
}

TEST_CASE("canonical key never separates isomorphic graphs") {
  Rng rng = make_rng(23);
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 1 + uniform_index(rng, 12);
    Graph g = er_graph(n, uniform_real(rng), rng);
    if (uniform_real(rng) < 0.5)
      g.set_anchor(static_cast<NodeId>(uniform_index(rng, n)));
    Graph h = permuted(g, rng);
    CHECK(canonical_key(g) == canonical_key(h));
  }
}

TEST_CASE("k-hop neighborhoods") {
  Graph path = path_graph(3);
  auto hop1 = k_hop_neighborhood(path, 0, 1);
  CHECK(hop1.graph.node_count() == 2);
  CHECK(hop1.graph.edge_count() == 1);
  CHECK(hop1.graph.anchor() == 0);
  CHECK(hop1.origin == std::vector<NodeId>{0, 1});

  auto hop2 = k_hop_neighborhood(path, 0, 2);
  CHECK(hop2.graph.node_count() == 3);
  CHECK(exact_isomorphic(hop2.graph, path.with_anchor(0)));

  auto hop0 = k_hop_neighborhood(complete_graph(5), 3, 0);
  CHECK(hop0.graph.node_count() == 1);
  CHECK(hop0.origin == std::vector<NodeId>{3});
}

TEST_CASE("weighted neighborhood sampling") {
  Rng rng = make_rng(29);
  Graph t = er_graph(5, 0.9, rng);
  while (!t.connected()) t = er_graph(5, 0.9, rng);

  auto one = sample_weighted_neighborhood(t, rng, 1);
  CHECK(one.graph.node_count() == 1);
  CHECK(one.graph.anchor() == 0);

  for (int i = 0; i < 20; ++i) {
    auto full = sample_weighted_neighborhood(t, rng, 5);
    CHECK(full.graph.node_count() == 5);
    CHECK(full.graph.connected());
  }

  for (int i = 0; i < 10; ++i) {
    auto tri = sample_weighted_neighborhood(complete_graph(3), rng, 3);
    CHECK(exact_isomorphic(tri.graph.without_anchor(), complete_graph(3)));
  }

  // Growth stays connected and the origin map is faithful.
  Graph big = er_graph(30, 0.15, rng);
  for (int i = 0; i < 30; ++i) {
    auto nb = sample_weighted_neighborhood(big, rng, 8);
    CHECK(nb.graph.connected());
    for (NodeId a = 0; a < nb.graph.node_count(); ++a)
      for (NodeId b = static_cast<NodeId>(a + 1); b < nb.graph.node_count(); ++b)
        CHECK(nb.graph.has_edge(a, b) == big.has_edge(nb.origin[a], nb.origin[b]));
  }
}

TEST_CASE("subgraph relation properties on sampled triples") {
  Rng rng = make_rng(31);
  int transitive_checked = 0;
  for (int i = 0; i < 400; ++i) {
    Graph a = er_graph(3, uniform_real(rng), rng).with_anchor(0);
    Graph b = er_graph(4 + uniform_index(rng, 2), uniform_real(rng), rng)
                  .with_anchor(0);
    Graph c = er_graph(6 + uniform_index(rng, 2), uniform_real(rng), rng)
                  .with_anchor(0);
    bool ab = is_anchored_subgraph(a, b).has_value();
    bool bc = is_anchored_subgraph(b, c).has_value();
    if (ab && bc) {
      CHECK(is_anchored_subgraph(a, c).has_value());
      ++transitive_checked;
    }
  }
  CHECK(transitive_checked > 5);

  // Anti-symmetry: mutual containment means isomorphism.
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + uniform_index(rng, 4);
    Graph a = er_graph(n, uniform_real(rng), rng).with_anchor(0);
    Graph b = permuted(a, rng);
    REQUIRE(is_anchored_subgraph(a, b).has_value());
    REQUIRE(is_anchored_subgraph(b, a).has_value());
    CHECK(exact_isomorphic(a, b));
  }
}

TEST_CASE("anchored counts are anti-monotone under subgraph extension") {
  Rng rng = make_rng(37);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    Graph t = er_graph(9, 0.45, rng);
    Graph b0 = er_graph(4, 0.7, rng);
    if (!b0.connected()) continue;
    Graph b = b0.with_anchor(static_cast<NodeId>(uniform_index(rng, 4)));
    // a = induced anchored subgraph of b.
    std::vector<NodeId> keep;
    for (NodeId v = 0; v < 4; ++v)
      if (v == b.anchor() || uniform_real(rng) < 0.6) keep.push_back(v);
    Graph a = b.induced(keep);
    if (!a.connected()) continue;
    REQUIRE(is_anchored_subgraph(a, b).has_value());
    CHECK(anchored_frequency(a, t) >= anchored_frequency(b, t));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("esu emits each connected subset exactly once") {
  Rng rng = make_rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = er_graph(8, 0.35, rng);
    for (std::size_t k = 1; k <= 4; ++k) {
      std::set<std::vector<NodeId>> seen;
      for_each_connected_subset(g, k, 1'000'000,
                                [&](const std::vector<NodeId>& sub) {
                                  std::vector<NodeId> s(sub.begin(), sub.end());
                                  std::sort(s.begin(), s.end());
                                  CHECK(g.induced(s).connected());
                                  CHECK(seen.insert(s).second);
                                });
      // Cross-check count against the naive combination scan.
      std::size_t naive = 0;
      MotifTable table = naive_enumerate(g, k, false);
      for (const auto& e : table.entries()) naive += static_cast<std::size_t>(e.count);
      CHECK(seen.size() == naive);
    }
  }
}

TEST_CASE("dataset directory io preserves order") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "mf_dataset_test";
  fs::remove_all(dir);
  std::vector<Graph> graphs{path_graph(3), complete_graph(4), star_graph(5)};
  write_dataset_dir(dir, graphs);
  auto back = read_dataset_dir(dir);
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == graphs[i]);
  fs::remove_all(dir);
}
