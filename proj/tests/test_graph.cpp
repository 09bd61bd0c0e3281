#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "small_graph_catalog.hpp"
#include "test_support.hpp"
#include "widthforge/graph.hpp"
#include "widthforge/solvers.hpp"

using namespace widthforge;
using namespace widthforge::testing;

TEST_CASE("contracting the middle of a path leaves a single edge") {
  Graph g = path_graph(3);
  Graph out = contract_into_neighbor(g, 1);
  CHECK(out.vertex_count() == 2);
  CHECK(out.has_edge(0, 2));
  CHECK(out.edge_count() == 1);
}

TEST_CASE("contracting a pendant vertex restores the triangle") {
  Graph g = complete(3);
  g.add_vertex(3);
  g.add_edge(0, 3);
  Graph out = contract_into_neighbor(g, 3);
  CHECK(out == complete(3));
}

TEST_CASE("contracting a 4-cycle vertex suppresses the parallel edge") {
  Graph g = cycle(4);
  Graph out = contract_into_neighbor(g, 1);
  CHECK(out.vertex_count() == 3);
  CHECK(out.edge_count() == 3);  // triangle on 0,2,3
  CHECK(out.has_edge(0, 2));
  CHECK(out.has_edge(0, 3));
  CHECK(out.has_edge(2, 3));
}

TEST_CASE("contraction rejects unknown, isolated and high-degree vertices") {
  Graph g = complete(4);
  g.add_vertex(9);
  CHECK_THROWS_AS(contract_into_neighbor(g, 77), std::invalid_argument);
  CHECK_THROWS_AS(contract_into_neighbor(g, 9), std::invalid_argument);
  CHECK_THROWS_AS(contract_into_neighbor(g, 0), std::invalid_argument);
}

TEST_CASE("subdividing an edge of K2 gives P3") {
  Graph out = subdivide_edge(path_graph(2), {0, 1});
  CHECK(out.vertex_count() == 3);
  CHECK(out.degree(2) == 2);
  CHECK(are_isomorphic(out, path_graph(3)));
}

TEST_CASE("subdividing a triangle edge gives a 4-cycle, twice gives a 5-cycle") {
  Graph once = subdivide_edge(complete(3), {0, 1});
  CHECK(are_isomorphic(once, cycle(4)));
  Graph twice = subdivide_edge(once, {0, 3});
  CHECK(are_isomorphic(twice, cycle(5)));
  CHECK_THROWS_AS(subdivide_edge(once, {0, 1}), std::invalid_argument);
}

TEST_CASE("minor witness accepts a triangle inside a 4-cycle") {
  Graph host = cycle(4);
  Graph minor = complete(3);
  MinorWitness w;
  w.branch_sets[0] = {0, 1};
  w.branch_sets[1] = {2};
  w.branch_sets[2] = {3};
  CHECK(verify_minor_witness(host, minor, w));
}

TEST_CASE("no witness makes a triangle a minor of a path") {
  Graph host = path_graph(4);
  Graph minor = complete(3);
  // a couple of representative attempts; paths have no cycle minors
  MinorWitness w1;
  w1.branch_sets[0] = {0};
  w1.branch_sets[1] = {1, 2};
  w1.branch_sets[2] = {3};
  CHECK_FALSE(verify_minor_witness(host, minor, w1));
  MinorWitness w2;
  w2.branch_sets[0] = {0, 1};
  w2.branch_sets[1] = {2};
  w2.branch_sets[2] = {3};
  CHECK_FALSE(verify_minor_witness(host, minor, w2));
}

TEST_CASE("minor witness rejects overlap, disconnection and unknown vertices") {
  Graph host = path_graph(4);
  Graph minor = path_graph(2);
  MinorWitness overlap;
  overlap.branch_sets[0] = {0, 1};
  overlap.branch_sets[1] = {1, 2};
  CHECK_FALSE(verify_minor_witness(host, minor, overlap));
  MinorWitness disconnected;
  disconnected.branch_sets[0] = {0, 2};
  disconnected.branch_sets[1] = {1};
  CHECK_FALSE(verify_minor_witness(host, minor, disconnected));
  MinorWitness unknown;
  unknown.branch_sets[0] = {0, 99};
  unknown.branch_sets[1] = {1};
  CHECK_THROWS_AS(verify_minor_witness(host, minor, unknown), std::invalid_argument);
}

TEST_CASE("regularity checks") {
  CHECK(is_regular(complete(4), 3));
  CHECK_FALSE(is_regular(path_graph(3), 2));
  CHECK(is_regular(cycle(5), 2));
  CHECK(is_regular(Graph{}, 7));
}

TEST_CASE("low-degree contraction keeps treewidth on small graphs of treewidth >= 3") {
  for (const Graph& g : nonisomorphic_graphs_upto(7)) {
    if (g.vertex_count() < 4) continue;
    int tw = exact_treewidth(g).width;
    if (tw < 3) continue;
    for (int v : g.vertices()) {
      int d = g.degree(v);
      if (d < 1 || d > 2) continue;
      CHECK(exact_treewidth(contract_into_neighbor(g, v)).width == tw);
    }
  }
}

TEST_CASE("subdivision keeps treewidth on small graphs of treewidth >= 2") {
  for (const Graph& g : nonisomorphic_graphs_upto(6)) {
    int tw = exact_treewidth(g).width;
    if (tw < 2) continue;
    for (Edge e : g.edges()) CHECK(exact_treewidth(subdivide_edge(g, e)).width == tw);
  }
}

TEST_CASE("verified minors never exceed the host treewidth") {
  std::mt19937 rng(20240811);
  for (const Graph& host : nonisomorphic_graphs_upto(6)) {
    if (host.vertex_count() < 3 || host.edge_count() == 0) continue;
    // random contraction/deletion sequence with its induced witness
    Graph minor = host;
    std::map<int, std::vector<int>> classes;
    for (int v : host.vertices()) classes[v] = {v};
    for (int step = 0; step < 2; ++step) {
      auto es = minor.edges();
      if (es.empty()) break;
      auto [u, v] = es[rng() % es.size()];
      // contract v into u
      Graph next;
      for (int w : minor.vertices())
        if (w != v) next.add_vertex(w);
      for (auto [a, b] : minor.edges()) {
        int x = a == v ? u : a;
        int y = b == v ? u : b;
        if (x != y) next.add_edge(x, y);
      }
      minor = next;
      auto moved = classes[v];
      classes[u].insert(classes[u].end(), moved.begin(), moved.end());
      classes.erase(v);
    }
    MinorWitness w;
    for (auto& [mv, set] : classes) w.branch_sets[mv] = set;
    REQUIRE(verify_minor_witness(host, minor, w));
    CHECK(exact_treewidth(minor).width <= exact_treewidth(host).width);
  }
}
