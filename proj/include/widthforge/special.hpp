#pragma once

#include <array>
#include <map>
#include <vector>

#include "widthforge/cubic.hpp"
#include "widthforge/graph.hpp"

namespace widthforge::special {

// Clique on d+1 fresh vertices minus one edge, whose two endpoints are both
// joined to v. Raises deg(v) by 2; keeps treewidth whenever the host has
// treewidth at least d.
Graph attach_degree_gadget(const Graph& g, int v, int d);

// d-regular instance from a 3-regular graph (odd d >= 5, (d-3)/2 gadgets per
// vertex) or a 4-regular graph (even d >= 6, (d-4)/2 gadgets per vertex).
Graph build_d_regular_instance(const Graph& g, int d);

// Replaces the edge by a bridge raising both endpoint degrees by one: a
// clique on five fresh vertices minus two disjoint edges, wired two-and-two
// to the endpoints. Keeps treewidth whenever the host treewidth is >= 5.
Graph bridge_adjacent_pair(const Graph& g, Edge e);

// Grid-based variant of the pipeline producing a 4-regular instance: grids
// instead of walls, degree-2 grid corners contracted, a perfect matching of
// the remaining degree-3 border vertices bridged by a degree-raising gadget
// (clique on 5 minus two disjoint edges), nine-vertex replacement trees whose
// roots are matched up pairwise per side, then low-degree contraction.
struct FourRegularResult {
  Graph graph;
  int target_width = 0;  // 3n + cutwidth(f) + 2
  bool exact_width_guaranteed = false;
  cubic::RepCliqueInstance rep_cliques;
  std::map<int, int> contraction_map;  // pre-contraction vertex -> survivor
};

FourRegularResult build_four_regular_instance(const Graph& cubic_source, const LinearOrdering& f,
                                              int grid_cols = -1);

// ---- 3-dimensional grid embedding ----

struct Coord {
  int x = 0, y = 0, z = 0;
  auto operator<=>(const Coord&) const = default;
};

// Subcubic induced subgraph of a (6n-1) x (3n+1) x 3 grid that subdivides the
// source: each source vertex becomes a five-vertex baseline path with three
// ports, each source edge a pair of towers bridged on the top layer at its
// own depth.
struct GridEmbedding {
  Graph graph;                 // the embedded host H
  std::map<int, Coord> coords;  // H vertex -> position
  int dim_x = 0, dim_y = 0, dim_z = 0;
  std::vector<int> branch_vertices;  // H vertex representing source vertex i
};

GridEmbedding embed_3d_grid(const Graph& cubic_source);

}  // namespace widthforge::special
