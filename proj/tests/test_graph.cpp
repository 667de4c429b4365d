#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>

#include "pmp/graph.hpp"

using namespace pmp;

namespace {

// Runs f and reports the error code it threw, if any.
template <typename F>
std::optional<errc> code_of(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code;
  }
  return std::nullopt;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// Two triangles sharing vertex 2.
Graph bowtie() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}

}  // namespace

TEST_CASE("graph construction and edge bookkeeping") {
  Graph g(4);
  g.add_edge(2, 0);
  g.add_edge(0, 1);
  g.add_edge(3, 0);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(0) == 3);
  CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3});
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(1, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});

  CHECK(code_of([&] { g.add_edge(0, 4); }) == errc::invalid_vertex);
  CHECK(code_of([&] { g.add_edge(1, 1); }) == errc::invalid_argument);
  CHECK(code_of([&] { g.add_edge(1, 0); }) == errc::duplicate_edge);

  CHECK(Graph::from_edges(3, {{0, 1}, {1, 2}}) == path(3));
}

TEST_CASE("shape predicates") {
  CHECK(path(4).is_tree());
  CHECK(path(4).is_path_graph());
  CHECK(!path(4).is_cycle_graph());
  CHECK(cycle(4).is_cycle_graph());
  CHECK(!cycle(4).is_tree());
  CHECK(cycle(3).is_cycle_graph());
  CHECK(star(3).is_tree());
  CHECK(!star(3).is_path_graph());
  CHECK(path(1).is_tree());
  CHECK(path(1).is_path_graph());

  Graph two(2);  // no edge
  CHECK(!two.is_connected());
  CHECK(!two.is_tree());
  CHECK(Graph(0).is_connected() == false);
}

TEST_CASE("structure scan on paths, cycles and shared-vertex blocks") {
  auto p4 = structure_scan(path(4));
  CHECK(p4.bridges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.cut_vertices == std::vector<int>{1, 2});
  CHECK(p4.biconnected_components ==
        std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});

  auto c4 = structure_scan(cycle(4));
  CHECK(c4.bridges.empty());
  CHECK(c4.cut_vertices.empty());
  CHECK(c4.biconnected_components ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});

  auto bow = structure_scan(bowtie());
  CHECK(bow.bridges.empty());
  CHECK(bow.cut_vertices == std::vector<int>{2});
  CHECK(bow.biconnected_components ==
        std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});

  // Triangle - bridge - triangle.
  Graph barbell = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  auto bar = structure_scan(barbell);
  CHECK(bar.bridges == std::vector<Edge>{{2, 3}});
  CHECK(bar.cut_vertices == std::vector<int>{2, 3});
  CHECK(bar.biconnected_components ==
        std::vector<std::vector<int>>{{0, 1, 2}, {2, 3}, {3, 4, 5}});

  auto k1 = structure_scan(path(1));
  CHECK(k1.bridges.empty());
  CHECK(k1.cut_vertices.empty());
  CHECK(k1.biconnected_components == std::vector<std::vector<int>>{{0}});

  auto k2 = structure_scan(path(2));
  CHECK(k2.bridges == std::vector<Edge>{{0, 1}});
  CHECK(k2.cut_vertices.empty());

  Graph two(2);
  CHECK(code_of([&] { structure_scan(two); }) == errc::disconnected_graph);
}

TEST_CASE("max isthmus on paths") {
  // A path on N vertices has isthmus v1..v(N-2): leaves are not cut vertices.
  auto p3 = max_isthmus(path(3));
  CHECK(p3.max_vertices == 1);
  REQUIRE(p3.witness.has_value());
  CHECK(*p3.witness == std::vector<int>{1});

  auto p4 = max_isthmus(path(4));
  CHECK(p4.max_vertices == 2);
  CHECK(*p4.witness == std::vector<int>{1, 2});

  auto p6 = max_isthmus(path(6));
  CHECK(p6.max_vertices == 4);
  CHECK(*p6.witness == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("graphs without any isthmus report one vertex and no witness") {
  for (const Graph& g : {cycle(3), cycle(5), path(1), path(2)}) {
    auto r = max_isthmus(g);
    CHECK(r.max_vertices == 1);
    CHECK(!r.witness.has_value());
  }
}

TEST_CASE("max isthmus on branching trees") {
  // Three legs of two edges each: no interior can pass the degree-3 center,
  // so the longest isthmus is a center-to-leg bridge.
  Graph spider =
      Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  auto r = max_isthmus(spider);
  CHECK(r.max_vertices == 2);
  CHECK(*r.witness == std::vector<int>{0, 1});

  // Legs of length 3, 3 and 1: the three-edge legs contribute 3-vertex
  // isthmuses; ties resolve to the lexicographically smallest.
  Graph spider2 = Graph::from_edges(
      8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 7}});
  auto r2 = max_isthmus(spider2);
  CHECK(r2.max_vertices == 3);
  CHECK(*r2.witness == std::vector<int>{0, 1, 2});

  // Cycle with a pendant path: the path side contributes the isthmus.
  Graph lolly = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
  auto r3 = max_isthmus(lolly);
  CHECK(r3.max_vertices == 3);
  CHECK(*r3.witness == std::vector<int>{2, 3, 4});
}

TEST_CASE("smallest isthmus of a given size") {
  Graph p6 = path(6);
  CHECK(*smallest_isthmus_with(p6, 1) == std::vector<int>{1});
  CHECK(*smallest_isthmus_with(p6, 2) == std::vector<int>{1, 2});
  CHECK(*smallest_isthmus_with(p6, 3) == std::vector<int>{1, 2, 3});
  CHECK(*smallest_isthmus_with(p6, 4) == std::vector<int>{1, 2, 3, 4});
  CHECK(!smallest_isthmus_with(p6, 5).has_value());
  CHECK(!smallest_isthmus_with(cycle(5), 1).has_value());
  CHECK(code_of([&] { smallest_isthmus_with(p6, 0); }) ==
        errc::invalid_argument);
}

TEST_CASE("centroid vertex or edge") {
  auto p5 = centroid(path(5));
  CHECK(p5.vertex == 2);
  CHECK(!p5.edge.has_value());

  auto p4 = centroid(path(4));
  CHECK(!p4.vertex.has_value());
  CHECK(p4.edge == Edge{1, 2});

  CHECK(centroid(star(4)).vertex == 0);
  CHECK(centroid(path(1)).vertex == 0);
  CHECK(centroid(path(2)).edge == Edge{0, 1});

  // Two degree-3 vertices joined by the splitting edge.
  Graph h = Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
  auto hc = centroid(h);
  CHECK(!hc.vertex.has_value());
  CHECK(hc.edge == Edge{1, 3});

  CHECK(code_of([&] { centroid(cycle(4)); }) == errc::not_a_tree);
}

TEST_CASE("diameter") {
  CHECK(diameter(path(4)) == 3);
  CHECK(diameter(path(1)) == 0);
  CHECK(diameter(cycle(6)) == 3);
  CHECK(diameter(star(3)) == 2);
  CHECK(diameter(bowtie()) == 2);
}

TEST_CASE("breadth-first spanning tree prefers small parent ids") {
  Graph t = bfs_spanning_tree(cycle(4), 0);
  CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});

  Graph grid = Graph::from_edges(
      4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  Graph gt = bfs_spanning_tree(grid, 3);
  CHECK(gt.edges() == std::vector<Edge>{{0, 1}, {1, 3}, {2, 3}});

  Graph tree = path(5);
  CHECK(bfs_spanning_tree(tree, 2) == tree);
}

TEST_CASE("shortest cycle through a vertex") {
  auto c5 = shortest_cycle_through(cycle(5), 0, CycleSearch::exact);
  REQUIRE(c5.has_value());
  CHECK(*c5 == std::vector<int>{0, 1, 2, 3, 4});

  auto bow = shortest_cycle_through(bowtie(), 0, CycleSearch::exact);
  CHECK(bow->size() == 3);

  // Six-cycle with chord 1-3: vertex 0 sits on a 5-cycle using the chord.
  Graph chord = cycle(6);
  chord.add_edge(1, 3);
  CHECK(shortest_cycle_through(chord, 0, CycleSearch::exact)->size() == 5);
  CHECK(shortest_cycle_through(chord, 2, CycleSearch::exact)->size() == 3);

  CHECK(!shortest_cycle_through(path(4), 1, CycleSearch::exact).has_value());

  // A vertex off every cycle.
  Graph lolly = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  CHECK(!shortest_cycle_through(lolly, 3, CycleSearch::any).has_value());
  CHECK(shortest_cycle_through(lolly, 0, CycleSearch::any)->size() == 3);
}

TEST_CASE("cycle length bound") {
  CHECK(cycle_length_bound(path(7)) == 1);
  CHECK(cycle_length_bound(cycle(6)) == 6);
  CHECK(cycle_length_bound(bowtie()) == 3);

  Graph chord = cycle(6);
  chord.add_edge(1, 3);
  CHECK(cycle_length_bound(chord) == 5);

  // Big tree with a small triangle hanging off: only cycle vertices count.
  Graph g = path(30);
  int n = g.vertex_count();
  Graph h(n + 2);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  h.add_edge(29, 30);
  h.add_edge(30, 31);
  h.add_edge(29, 31);
  CHECK(cycle_length_bound(h) == 3);

  // 3x3 grid: every vertex is on a 4-cycle.
  Graph grid(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      if (c + 1 < 3) grid.add_edge(3 * r + c, 3 * r + c + 1);
      if (r + 1 < 3) grid.add_edge(3 * r + c, 3 * (r + 1) + c);
    }
  CHECK(cycle_length_bound(grid) == 4);
}

TEST_CASE("bfs distances and tree paths") {
  CHECK(bfs_distances(cycle(4), 0) == std::vector<int>{0, 1, 2, 1});
  Graph two(2);
  CHECK(bfs_distances(two, 0) == std::vector<int>{0, -1});

  CHECK(tree_path(path(5), 1, 4) == std::vector<int>{1, 2, 3, 4});
  CHECK(tree_path(path(5), 3, 0) == std::vector<int>{3, 2, 1, 0});
  CHECK(tree_path(path(5), 2, 2) == std::vector<int>{2});
  CHECK(tree_path(star(3), 1, 2) == std::vector<int>{1, 0, 2});
}
