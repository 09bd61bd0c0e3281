#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace widthforge {

using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Undirected simple graph over integer vertex ids. Ids need not be dense;
// constructions that require dense ids check for it. All query methods are
// const; the mutators are only meant for building a graph up, after which
// values are shared freely.
class Graph {
public:
  Graph() = default;

  static Graph with_vertex_count(int n);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  void add_vertex(int v);
  void add_edge(int u, int v);  // endpoints must exist; idempotent
  void remove_edge(int u, int v);
  void remove_vertex(int v);

  bool has_vertex(int v) const { return adj_.count(v) != 0; }
  bool has_edge(int u, int v) const;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  int degree(int v) const;
  const std::set<int>& neighbors(int v) const;

  std::vector<int> vertices() const;  // ascending
  std::vector<Edge> edges() const;    // (u,v) with u < v, lexicographic
  int max_vertex_id() const;
  int min_vertex_id() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
  std::map<int, std::set<int>> adj_;
  int edge_count_ = 0;

  const std::set<int>& checked(int v) const;
};

// Witness that `minor` is obtained from a host by contracting each branch set
// to a single vertex (plus deletions). Branch sets are keyed by minor vertex.
struct MinorWitness {
  std::map<int, std::vector<int>> branch_sets;
};

// Merges v into its smallest-id neighbour; v must have degree 1 or 2.
Graph contract_into_neighbor(const Graph& g, int v);

// Replaces e by a length-2 path through a fresh vertex (max id + 1).
Graph subdivide_edge(const Graph& g, Edge e);

// True iff the branch sets are nonempty, disjoint, each induces a connected
// subgraph of the host, every minor vertex has a branch set, and every minor
// edge is realised by a host edge between the two branch sets.
// Throws if the witness mentions vertices outside host or minor.
bool verify_minor_witness(const Graph& host, const Graph& minor, const MinorWitness& w);

bool is_regular(const Graph& g, int d);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
// Components of g with `excluded` vertices removed.
std::vector<std::vector<int>> components_excluding(const Graph& g, const std::set<int>& excluded);

void add_clique(Graph& g, const std::vector<int>& vs);

// Brute-force isomorphism test, intended for graphs with at most ~9 vertices.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace widthforge
