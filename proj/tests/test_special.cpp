#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "small_graph_catalog.hpp"
#include "test_support.hpp"
#include "widthforge/cubic.hpp"
#include "widthforge/solvers.hpp"
#include "widthforge/special.hpp"

using namespace widthforge;
using namespace widthforge::testing;
namespace sp = widthforge::special;

TEST_CASE("degree gadget shape and degree bookkeeping") {
  Graph g = complete(5);
  Graph out = sp::attach_degree_gadget(g, 0, 4);
  CHECK(out.vertex_count() == 10);
  CHECK(out.degree(0) == 4 + 2);
  // the two split-pair vertices have d-1 clique neighbours plus the host
  CHECK(out.degree(5) == 4);
  CHECK(out.degree(6) == 4);
  CHECK(out.degree(7) == 4);
  CHECK_FALSE(out.has_edge(5, 6));
  CHECK_THROWS_AS(sp::attach_degree_gadget(g, 99, 4), std::invalid_argument);
}

TEST_CASE("degree gadget keeps the treewidth of K5") {
  Graph g = complete(5);
  for (int v : g.vertices()) CHECK(exact_treewidth(sp::attach_degree_gadget(g, v, 4)).width == 4);
}

TEST_CASE("degree gadget raises a cubic vertex to degree five without changing width") {
  // host of treewidth 4 with a degree-3 vertex
  Graph g = complete(5);
  g.add_vertex(5);
  g.add_edge(5, 0);
  g.add_edge(5, 1);
  g.add_edge(5, 2);
  REQUIRE(exact_treewidth(g).width == 4);
  Graph out = sp::attach_degree_gadget(g, 5, 4);
  CHECK(out.degree(5) == 5);
  CHECK(exact_treewidth(out).width == 4);
}

TEST_CASE("degree gadget keeps treewidth on every small host above the threshold") {
  for (int d : {3, 4})
    for (const Graph& g : nonisomorphic_graphs_upto(6)) {
      int tw = exact_treewidth(g).width;
      if (tw < d) continue;
      for (int v : g.vertices())
        CHECK(exact_treewidth(sp::attach_degree_gadget(g, v, d)).width == tw);
    }
}

TEST_CASE("d-regular builder on K4") {
  Graph g = complete(4);
  for (int d : {5, 7}) {
    Graph out = sp::build_d_regular_instance(g, d);
    CHECK(is_regular(out, d));
    CHECK(out.vertex_count() == 4 + 4 * ((d - 3) / 2) * (d + 1));
  }
}

TEST_CASE("d-regular builder enforces parity and regularity") {
  CHECK_THROWS_AS(sp::build_d_regular_instance(complete(4), 4), std::invalid_argument);
  CHECK_THROWS_AS(sp::build_d_regular_instance(complete(4), 3), std::invalid_argument);
  CHECK_THROWS_AS(sp::build_d_regular_instance(complete(4), 6), std::invalid_argument);
  CHECK_THROWS_AS(sp::build_d_regular_instance(path_graph(4), 5), std::invalid_argument);
  // K5 is 4-regular, so even targets work from it
  CHECK(is_regular(sp::build_d_regular_instance(complete(5), 6), 6));
}

TEST_CASE("edge bridge raises both endpoint degrees by one and keeps width on wide hosts") {
  for (const Graph& host : {complete(6), complete(7)}) {
    int tw = exact_treewidth(host).width;
    REQUIRE(tw >= 5);
    Graph out = sp::bridge_adjacent_pair(host, {0, 1});
    CHECK(out.degree(0) == host.degree(0) + 1);
    CHECK(out.degree(1) == host.degree(1) + 1);
    CHECK_FALSE(out.has_edge(0, 1));
    CHECK(exact_treewidth(out).width == tw);
  }
  CHECK_THROWS_AS(sp::bridge_adjacent_pair(complete(6), {0, 99}), std::invalid_argument);
}

TEST_CASE("four-regular instance from K4") {
  Graph g = complete(4);
  auto res = sp::build_four_regular_instance(g, identity_ordering(g), 12);
  CHECK(is_regular(res.graph, 4));
  CHECK(res.target_width == 18);
  CHECK_FALSE(res.exact_width_guaranteed);
  // chaining the degree gadget on top gives the even targets
  CHECK(is_regular(sp::build_d_regular_instance(res.graph, 6), 6));
}

TEST_CASE("four-regular instance at canonical size") {
  Graph g = complete(4);
  auto res = sp::build_four_regular_instance(g, identity_ordering(g));
  CHECK(is_regular(res.graph, 4));
}

TEST_CASE("grid embedding of K4 has the documented frame") {
  Graph g = complete(4);
  auto emb = sp::embed_3d_grid(g);
  CHECK(emb.dim_x == 23);
  CHECK(emb.dim_y == 13);
  CHECK(emb.dim_z == 3);
  for (const auto& [v, c] : emb.coords) {
    CHECK(c.x >= 0);
    CHECK(c.x < emb.dim_x);
    CHECK(c.y >= 0);
    CHECK(c.y < emb.dim_y);
    CHECK(c.z >= 0);
    CHECK(c.z < emb.dim_z);
  }
  // one degree-3 vertex per source vertex, everything else degree 2
  int deg3 = 0;
  for (int v : emb.graph.vertices()) {
    CHECK(emb.graph.degree(v) <= 3);
    CHECK(emb.graph.degree(v) >= 2);
    if (emb.graph.degree(v) == 3) ++deg3;
  }
  CHECK(deg3 == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(emb.coords.at(emb.branch_vertices[i]) == sp::Coord{6 * i + 2, 0, 0});
    CHECK(emb.graph.degree(emb.branch_vertices[i]) == 3);
  }
  CHECK_THROWS_AS(sp::embed_3d_grid(path_graph(3)), std::invalid_argument);
}

namespace {

void check_induced(const sp::GridEmbedding& emb) {
  std::map<sp::Coord, int> at;
  for (const auto& [v, c] : emb.coords) at[c] = v;
  REQUIRE(at.size() == emb.coords.size());
  for (const auto& [v, c] : emb.coords) {
    for (auto [dx, dy, dz] : std::vector<std::array<int, 3>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
      auto it = at.find({c.x + dx, c.y + dy, c.z + dz});
      if (it != at.end()) CHECK(emb.graph.has_edge(v, it->second));
    }
  }
  for (auto [u, v] : emb.graph.edges()) {
    auto a = emb.coords.at(u);
    auto b = emb.coords.at(v);
    CHECK(std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z) == 1);
  }
}

int longest_subdivision(const sp::GridEmbedding& emb) {
  // walk the degree-2 chains between branch vertices
  std::set<int> branch(emb.branch_vertices.begin(), emb.branch_vertices.end());
  int longest = 0;
  for (int b : branch)
    for (int start : emb.graph.neighbors(b)) {
      int len = 0, prev = b, cur = start;
      while (!branch.count(cur)) {
        ++len;
        int next = -1;
        for (int w : emb.graph.neighbors(cur))
          if (w != prev) next = w;
        prev = cur;
        cur = next;
      }
      longest = std::max(longest, len);
    }
  return longest;
}

}  // namespace

TEST_CASE("grid embedding invariants for K4 and K33") {
  for (const Graph& g : {complete(4), complete_bipartite(3, 3)}) {
    int n = g.vertex_count();
    auto emb = sp::embed_3d_grid(g);
    check_induced(emb);
    CHECK(longest_subdivision(emb) <= 12 * n + 5);
    auto core = cubic::contract_low_degree(emb.graph);
    CHECK(are_isomorphic(core.graph, g));
  }
}

TEST_CASE("grid embedding suppression recovers the 3-cube") {
  auto emb = sp::embed_3d_grid(hypercube(3));
  check_induced(emb);
  auto core = cubic::contract_low_degree(emb.graph);
  CHECK(are_isomorphic(core.graph, hypercube(3)));
}
