#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "naive_oracles.hpp"
#include "small_graph_catalog.hpp"
#include "test_support.hpp"
#include "widthforge/cobipartite.hpp"
#include "widthforge/decomposition.hpp"
#include "widthforge/solvers.hpp"

using namespace widthforge;
using namespace widthforge::testing;

namespace {

TreeDecomposition single_bag(const Graph& g) {
  TreeDecomposition td;
  td.tree.add_vertex(0);
  td.bags[0] = g.vertices();
  return td;
}

}  // namespace

TEST_CASE("one bag covering a triangle has width 2") {
  Graph g = complete(3);
  CHECK(verify_tree_decomposition(g, single_bag(g)) == 2);
}

TEST_CASE("the standard two-bag decomposition of P3 has width 1") {
  Graph g = path_graph(3);
  PathDecomposition pd;
  pd.bags = {{0, 1}, {1, 2}};
  CHECK(verify_path_decomposition(g, pd) == 1);
  CHECK(verify_tree_decomposition(g, pd.to_tree()) == 1);
}

TEST_CASE("a missing edge is reported with a witness") {
  Graph g = Graph::with_vertex_count(3);
  g.add_edge(1, 2);
  PathDecomposition pd;
  pd.bags = {{0, 1}, {2}};
  auto res = check_path_decomposition(g, pd);
  REQUIRE_FALSE(res.ok());
  CHECK(res.violation->axiom == Axiom::EdgeCoverage);
  CHECK(res.violation->edge == Edge{1, 2});
  CHECK_THROWS_AS(verify_path_decomposition(g, pd), DecompositionError);
}

TEST_CASE("the remaining axiom violations carry witnesses") {
  Graph g = path_graph(3);
  PathDecomposition missing;
  missing.bags = {{0, 1}, {1}};
  auto res = check_path_decomposition(g, missing);
  REQUIRE_FALSE(res.ok());
  CHECK(res.violation->axiom == Axiom::VertexCoverage);
  CHECK(res.violation->vertex == 2);

  PathDecomposition split;
  split.bags = {{0, 1}, {1, 2}, {0, 2}};  // 0 occurs at both ends only
  res = check_path_decomposition(g, split);
  REQUIRE_FALSE(res.ok());
  CHECK(res.violation->axiom == Axiom::Connectivity);
  CHECK(res.violation->vertex == 0);

  TreeDecomposition loop;
  loop.tree = cycle(3);
  loop.bags[0] = loop.bags[1] = loop.bags[2] = g.vertices();
  CHECK(check_tree_decomposition(g, loop).violation->axiom == Axiom::TreeShape);

  PathDecomposition alien;
  alien.bags = {{0, 1, 5}, {1, 2}};
  CHECK(check_path_decomposition(g, alien).violation->axiom == Axiom::VertexUnknown);
}

TEST_CASE("cutwidth of hand-checked orderings") {
  CHECK(cutwidth_of_ordering(path_graph(4), identity_ordering(path_graph(4))) == 1);
  for (const auto& order : all_orderings(complete(4)))
    CHECK(cutwidth_of_ordering(complete(4), LinearOrdering{order}) == 4);
  Graph s = star(3);
  CHECK(cutwidth_of_ordering(s, LinearOrdering{{1, 0, 2, 3}}) == 2);
  CHECK_THROWS_AS(cutwidth_of_ordering(s, LinearOrdering{{0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("vertex separation of hand-checked orderings") {
  Graph k3 = complete(3);
  for (const auto& order : all_orderings(k3))
    CHECK(vertex_separation_of_ordering(k3, LinearOrdering{order}) == 2);
  CHECK(vertex_separation_of_ordering(path_graph(4), identity_ordering(path_graph(4))) == 1);
  CHECK(vertex_separation_of_ordering(cycle(4), LinearOrdering{{0, 1, 2, 3}}) == 2);
}

TEST_CASE("clique bag lookup") {
  Graph g = complete(4);
  TreeDecomposition td = single_bag(g);
  CHECK(find_clique_bag(g, td, {0, 1, 2, 3}) == 0);
  CHECK(find_clique_bag(g, td, {2}) == 0);
  Graph p = path_graph(3);
  auto ptd = exact_treewidth(p).decomposition;
  CHECK_THROWS_AS(find_clique_bag(p, ptd, {0, 2}), std::invalid_argument);  // not a clique
}

TEST_CASE("balanced bag search scans nodes in order and the middle of P5 qualifies") {
  Graph g = path_graph(5);
  PathDecomposition pd;
  pd.bags = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  TreeDecomposition td = pd.to_tree();
  std::vector<int> all = g.vertices();
  CHECK(bag_is_balanced_for(g, td, 1, all));  // bag {1,2}: components {0} and {3,4}
  auto got = find_balanced_bag(g, td, all);
  CHECK_FALSE(got.weak_bound);
  CHECK(got.node == 0);  // {0,1} leaves one component {2,3,4} of size ceil(5/2)
  CHECK(bag_is_balanced_for(g, td, got.node, all));

  TreeDecomposition sb = single_bag(g);
  CHECK(find_balanced_bag(g, sb, all).node == 0);
}

TEST_CASE("pruning removes subsumed leaves and is idempotent") {
  TreeDecomposition td;
  td.tree.add_vertex(0);
  td.tree.add_vertex(1);
  td.tree.add_edge(0, 1);
  td.bags[0] = {0, 1};
  td.bags[1] = {0, 1, 2};
  auto pruned = prune_subsumed_leaves(td);
  CHECK(pruned.tree.vertex_count() == 1);
  CHECK(pruned.bags.at(1) == std::vector<int>{0, 1, 2});

  TreeDecomposition chain;
  for (int i = 0; i < 3; ++i) chain.tree.add_vertex(i);
  chain.tree.add_edge(0, 1);
  chain.tree.add_edge(1, 2);
  chain.bags[0] = {0};
  chain.bags[1] = {0, 1};
  chain.bags[2] = {1, 2};
  auto once = prune_subsumed_leaves(chain);
  CHECK(once.tree.vertex_count() == 2);
  auto twice = prune_subsumed_leaves(once);
  CHECK(twice.bags == once.bags);
}

TEST_CASE("pruning never increases width on solver outputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(6, 0.5, rng);
    auto td = exact_treewidth(g).decomposition;
    auto pruned = prune_subsumed_leaves(td);
    CHECK(verify_tree_decomposition(g, pruned) <= td.width());
  }
}

TEST_CASE("pathify of a single joint bag instance") {
  Graph k1 = Graph::with_vertex_count(1);
  auto inst = cobipartite::build_instance(k1);
  auto td = single_bag(inst.graph);
  auto pd = pathify_between_cliques(inst.graph, td, {0}, {1});
  CHECK(pd.bags.size() == 1);
  CHECK(verify_path_decomposition(inst.graph, pd) == 1);
}

TEST_CASE("pathify keeps endpoints and drops a spurious leaf") {
  // doubled P3 with one extra leaf bag duplicating part of its neighbour
  Graph p3 = path_graph(3);
  auto inst = cobipartite::build_instance(p3);
  auto opt = exact_pathwidth(inst.graph);
  TreeDecomposition td = opt.decomposition.to_tree();
  int extra = td.tree.vertex_count();
  td.tree.add_vertex(extra);
  td.tree.add_edge(extra, 0);
  td.bags[extra] = {td.bags[0].front()};
  REQUIRE(check_tree_decomposition(inst.graph, td).ok());

  auto pd = pathify_between_cliques(inst.graph, td, inst.original_side(), inst.mirror_side());
  int w = verify_path_decomposition(inst.graph, pd);
  CHECK(w <= opt.width);
  auto front = pd.bags.front();
  auto back = pd.bags.back();
  for (int v : inst.original_side())
    CHECK(std::binary_search(front.begin(), front.end(), v));
  for (int v : inst.mirror_side())
    CHECK(std::binary_search(back.begin(), back.end(), v));
}

TEST_CASE("pathify on random doubled instances keeps width and endpoint cliques") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 0.5, rng);
    auto inst = cobipartite::build_instance(g);
    auto base = exact_treewidth(inst.graph).decomposition;
    // pad with a few subsumed leaves
    for (int extra = 0; extra < 3; ++extra) {
      int node = base.tree.vertex_count();
      int host = static_cast<int>(rng() % node);
      const auto& hb = base.bags.at(host);
      std::vector<int> sub;
      for (int v : hb)
        if (rng() % 2) sub.push_back(v);
      base.tree.add_vertex(node);
      base.tree.add_edge(node, host);
      base.bags[node] = sub;
    }
    REQUIRE(check_tree_decomposition(inst.graph, base).ok());
    auto pd = pathify_between_cliques(inst.graph, base, inst.original_side(), inst.mirror_side());
    CHECK(verify_path_decomposition(inst.graph, pd) <= base.width());
    for (int v : inst.original_side())
      CHECK(std::binary_search(pd.bags.front().begin(), pd.bags.front().end(), v));
    for (int v : inst.mirror_side())
      CHECK(std::binary_search(pd.bags.back().begin(), pd.bags.back().end(), v));
  }
}

TEST_CASE("pathify reports when the cliques cannot absorb an off-path bag") {
  Graph g = path_graph(3);
  TreeDecomposition td;
  for (int i = 0; i < 3; ++i) td.tree.add_vertex(i);
  td.tree.add_edge(0, 1);
  td.tree.add_edge(1, 2);
  td.bags[0] = {0, 1};
  td.bags[1] = {1};
  td.bags[2] = {1, 2};
  REQUIRE(check_tree_decomposition(g, td).ok());
  // vertex 2 lives only in the off-path leaf, so it cannot be deleted
  CHECK_THROWS_AS(pathify_between_cliques(g, td, {0}, {1}), std::runtime_error);
}

TEST_CASE("minimum vertex separation over all orderings matches the pathwidth solver") {
  for (const Graph& g : nonisomorphic_graphs_upto(7)) {
    int best = g.empty() ? -1 : naive_pathwidth(g);
    CHECK(exact_pathwidth(g).width == best);
  }
}
