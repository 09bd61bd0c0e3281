#pragma once

#include <array>
#include <map>
#include <vector>

#include "widthforge/decomposition.hpp"
#include "widthforge/graph.hpp"

namespace widthforge::cubic {

// ---- stage 1: representative cliques ----
//
// Every source vertex v contributes three representatives, every source edge
// two. Both representative families are turned into cliques and each vertex
// family is fully joined to the families of its incident edges. Ids are
// deterministic: vertex v (dense ids 0..n-1) owns 3v..3v+2, the j-th edge in
// lexicographic order owns 3n+2j and 3n+2j+1.
struct RepCliqueInstance {
  Graph graph;
  int source_n = 0;
  int source_m = 0;
  std::vector<Edge> source_edges;                 // sorted; index is the edge id
  std::vector<std::array<int, 3>> vertex_reps;    // by source vertex
  std::vector<std::array<int, 2>> edge_reps;      // by edge id

  std::vector<int> vertex_clique() const;  // all vertex representatives
  std::vector<int> edge_clique() const;    // all edge representatives
  std::vector<int> incident_edge_ids(int v) const;  // ascending, size 3
};

RepCliqueInstance build_rep_cliques(const Graph& cubic_source);

// Path decomposition with one bag per ordering position: representatives of
// vertices not yet passed plus representatives of edges already touched.
// Width comes out as exactly 3n + 2 + cutwidth of the ordering.
PathDecomposition ordering_pathdec(const RepCliqueInstance& inst, const LinearOrdering& f);

// Reads an ordering back out of any valid decomposition of the instance
// graph: pathify between the two representative cliques, take for each source
// vertex the last bag holding all three of its representatives, sort by that
// position (ties by vertex id). Its cutwidth is at most width - 3n - 2.
LinearOrdering extract_ordering(const RepCliqueInstance& inst, const TreeDecomposition& td);

// ---- brick walls ----

// rows x cols wall: all horizontal edges, vertical edges between rows i,i+1
// at columns of matching parity ((row+col) even). Max degree 3 and the outer
// columns have degree at most 2.
struct BrickWall {
  Graph graph;
  int rows = 0, cols = 0;
  int base_id = 0;

  int id_at(int row, int col) const { return base_id + row * cols + col; }
  std::vector<int> column(int col) const;
};

BrickWall build_brick_wall(int rows, int cols, int base_id = 0);

// Column sweep: starts with the first column, ends with the last, width
// exactly rows (so at most cols whenever rows <= cols).
PathDecomposition brick_wall_pathdec(const BrickWall& wall);

// ---- stage 2: cliques replaced by walls ----

struct WallStage {
  Graph graph;
  int rows = 0, cols = 0;
  int left_base = 0, right_base = 0;  // wall vertex id blocks

  int left_id(int row, int col) const { return left_base + row * cols + col; }
  int right_id(int row, int col) const { return right_base + row * cols + col; }
  // row matched to vertex-representative `row` (left) / edge-representative
  // 3n+row (right)
};

// Removes both representative-clique edge sets and attaches one wall per
// side: the left wall's last column is matched row-by-row to the vertex
// representatives in id order, the right wall's first column to the edge
// representatives. cols defaults to 24n; rows are fixed at 3n.
WallStage attach_walls(const RepCliqueInstance& inst, int cols = -1);

// Wall sweep, hand-over into the vertex representatives, original bags, then
// hand-over out of the edge representatives and the right wall sweep. Keeps
// the input width.
PathDecomposition lift_to_wall_stage(const RepCliqueInstance& inst, const WallStage& ws,
                                     const PathDecomposition& pd);

// ---- stage 3: subcubic gadget trees ----

// Eleven-vertex tree replacing one representative: root of degree 2, inner
// vertices of degree 3, six leaves in two groups of three.
struct GadgetTree {
  int root = -1;
  int left_child = -1, right_child = -1;
  int left_inner = -1, right_inner = -1;
  std::array<int, 6> leaves{};  // 0..2 under the left child, 3..5 under the right

  std::vector<int> all() const;
  std::vector<int> side_closure(int side) const;  // root + child + its subtree, 6 vertices
};

struct TreeStage {
  Graph graph;
  std::map<int, GadgetTree> gadgets;  // by replaced representative id
};

// Replaces every representative by a gadget tree. Roots keep the
// representative's id and its wall edge; each former join edge becomes a
// leaf-to-leaf edge. Edge-side trees group their leaves by endpoint: the
// smaller endpoint's representatives attach under the left child.
TreeStage expand_to_trees(const RepCliqueInstance& inst, const WallStage& ws);

// Adds one leaf bag per source vertex holding its three full gadget trees
// plus, per incident edge copy, the root and the matching side subtree: 69
// vertices. Original bags are unchanged, so width max(input, 68). Refuses
// inputs of width below 68 unless allow_width_growth is set.
TreeDecomposition lift_to_tree_stage(const RepCliqueInstance& inst, const TreeStage& ts,
                                     const PathDecomposition& pd, bool allow_width_growth = false);

// ---- stage 4: contraction to a 3-regular graph ----

struct ContractionResult {
  Graph graph;
  std::map<int, int> merged_into;  // input vertex -> surviving vertex
};

// Repeatedly merges the smallest-id vertex of degree 1 or 2 into its
// smallest neighbour. Errors out if the graph would collapse entirely.
ContractionResult contract_low_degree(const Graph& g);

// Minor witness with one branch set per surviving vertex (its merge class).
MinorWitness witness_from_contraction(const ContractionResult& cr);

// Rename decomposition bags through a contraction map.
TreeDecomposition rename_through_contraction(const TreeDecomposition& td,
                                             const std::map<int, int>& merged_into);

// ---- full pipeline ----

struct PipelineResult {
  Graph graph;           // final 3-regular instance
  int target_width = 0;  // 3n + cutwidth(f) + 2
  TreeDecomposition certificate;
  bool exact_width_guaranteed = false;  // canonical wall size and n >= 22

  RepCliqueInstance rep_cliques;
  WallStage wall_stage;
  TreeStage tree_stage;
  std::map<int, int> contraction_map;
};

// Runs all four stages, threading the certificate through every lift.
// wall_cols overrides the canonical 24n column count (and voids the width
// guarantee flag).
PipelineResult reduce_cutwidth_to_treewidth(const Graph& cubic_source, const LinearOrdering& f,
                                            int wall_cols = -1);

}  // namespace widthforge::cubic
