#pragma once

#include "widthforge/decomposition.hpp"
#include "widthforge/graph.hpp"

namespace widthforge::cobipartite {

// Co-bipartite doubling of a source graph on vertices 0..n-1: each vertex v
// gets a mirror v+n, both sides become cliques, v is joined to its own mirror
// and to the mirrors of its neighbours. The mirror id rule v' = v + n is the
// whole reduction trace.
struct Instance {
  Graph graph;
  int source_n = 0;

  int mirror_of(int v) const { return v + source_n; }
  std::vector<int> original_side() const;
  std::vector<int> mirror_side() const;
};

// Requires dense source ids 0..n-1.
Instance build_instance(const Graph& source);

// Bag i of the result keeps every original vertex that still occurs at or
// after bag i and every mirror whose vertex occurred at or before bag i.
// Width grows by exactly n for a valid input of any width.
PathDecomposition lift_path_decomposition(const Instance& inst, const Graph& source,
                                          const PathDecomposition& pd);

// Inverse direction: bag x keeps v iff both v and its mirror are in bag x.
// Requires a valid path decomposition of the doubled graph whose first bag
// contains the original side and whose last bag contains the mirror side;
// width shrinks by exactly n.
PathDecomposition project_path_decomposition(const Instance& inst, const Graph& source,
                                             const PathDecomposition& pd);

// Convenience composition: pathify an arbitrary tree decomposition between
// the two sides, then project.
PathDecomposition project_tree_decomposition(const Instance& inst, const Graph& source,
                                             const TreeDecomposition& td);

}  // namespace widthforge::cobipartite
