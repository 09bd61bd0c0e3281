#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "widthforge/graph.hpp"

namespace widthforge {

// Tree of bags over a graph's vertices. Node ids live in `tree`, bags are
// sorted deduplicated vertex lists, one per node.
struct TreeDecomposition {
  Graph tree;
  std::map<int, std::vector<int>> bags;

  int width() const;  // max bag size - 1, -1 if all bags are empty
};

// Path of bags, stored as the bag sequence so interval properties are
// directly checkable.
struct PathDecomposition {
  std::vector<std::vector<int>> bags;

  int width() const;
  TreeDecomposition to_tree() const;  // nodes 0..k-1 chained in order
};

// Positions are implicit: order[i] is the vertex at position i+1.
struct LinearOrdering {
  std::vector<int> order;
};

enum class Axiom {
  TreeShape,       // decomposition tree is not a nonempty tree
  VertexUnknown,   // a bag mentions a vertex outside the graph
  VertexCoverage,  // some graph vertex is in no bag
  EdgeCoverage,    // some graph edge is in no bag
  Connectivity,    // some vertex's occurrence set is not connected/contiguous
};

struct Violation {
  Axiom axiom;
  int vertex = -1;
  Edge edge{-1, -1};
  int node = -1;
  std::string describe() const;
};

struct CheckResult {
  int width = -1;
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

struct DecompositionError : std::runtime_error {
  explicit DecompositionError(const Violation& v) : std::runtime_error(v.describe()), violation(v) {}
  Violation violation;
};

CheckResult check_tree_decomposition(const Graph& g, const TreeDecomposition& td);
CheckResult check_path_decomposition(const Graph& g, const PathDecomposition& pd);

// Same checks, but return the width directly and throw DecompositionError
// carrying the failing axiom and a witness.
int verify_tree_decomposition(const Graph& g, const TreeDecomposition& td);
int verify_path_decomposition(const Graph& g, const PathDecomposition& pd);

// Max over cut positions i of edges {v,w} with pos(v) <= i < pos(w).
int cutwidth_of_ordering(const Graph& g, const LinearOrdering& f);

// Max over prefixes of the number of later vertices with a neighbour in the
// prefix.
int vertex_separation_of_ordering(const Graph& g, const LinearOrdering& f);

// First node (ascending id) whose bag contains the clique. The clique
// precondition is enforced; existence is then guaranteed for a valid
// decomposition.
int find_clique_bag(const Graph& g, const TreeDecomposition& td, const std::vector<int>& clique);

// True iff every component of g minus the node's bag holds at most
// ceil(|targets|/2) vertices of `targets`.
bool bag_is_balanced_for(const Graph& g, const TreeDecomposition& td, int node,
                         const std::vector<int>& targets);

struct BalancedBag {
  int node;
  bool weak_bound;  // true when only the |V|/2 fallback bound was met
};

// First node (ascending id) meeting the ceil(|targets|/2) component bound;
// falls back to the |V(g)|/2 bound and flags it.
BalancedBag find_balanced_bag(const Graph& g, const TreeDecomposition& td,
                              const std::vector<int>& targets);

// Repeatedly removes leaves whose bag is contained in their neighbour's bag.
TreeDecomposition prune_subsumed_leaves(const TreeDecomposition& td);

// Path decomposition obtained by locating bags containing the cliques a and b
// and deleting all off-path leaves. Requires that every vertex is covered by
// a union of the two cliques' connected regions, which holds whenever a and b
// together cover V(g); otherwise reports failure.
PathDecomposition pathify_between_cliques(const Graph& g, const TreeDecomposition& td,
                                          const std::vector<int>& a, const std::vector<int>& b);

// Tree decompositions whose tree is a path, read back into bag-sequence form.
PathDecomposition path_from_tree(const TreeDecomposition& td);

bool is_permutation_of(const Graph& g, const LinearOrdering& f);
bool is_clique(const Graph& g, const std::vector<int>& vs);

}  // namespace widthforge
