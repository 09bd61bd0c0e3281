#include "widthforge/special.hpp"

#include <algorithm>
#include <set>

namespace widthforge::special {

Graph attach_degree_gadget(const Graph& g, int v, int d) {
  if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  if (d < 3) throw std::invalid_argument("gadget needs d >= 3");
  Graph out = g;
  int base = g.max_vertex_id() + 1;
  std::vector<int> clique;
  for (int i = 0; i <= d; ++i) {
    out.add_vertex(base + i);
    clique.push_back(base + i);
  }
  add_clique(out, clique);
  out.remove_edge(base, base + 1);
  out.add_edge(v, base);
  out.add_edge(v, base + 1);
  return out;
}

Graph build_d_regular_instance(const Graph& g, int d) {
  int copies;
  if (d >= 5 && d % 2 == 1) {
    if (!is_regular(g, 3)) throw std::invalid_argument("odd-degree target needs a 3-regular input");
    copies = (d - 3) / 2;
  } else if (d >= 6 && d % 2 == 0) {
    if (!is_regular(g, 4)) throw std::invalid_argument("even-degree target needs a 4-regular input");
    copies = (d - 4) / 2;
  } else {
    throw std::invalid_argument("target degree must be odd >= 5 or even >= 6");
  }
  Graph out = g;
  for (int v : g.vertices())
    for (int c = 0; c < copies; ++c) out = attach_degree_gadget(out, v, d);
  return out;
}

namespace {

// Edge replacement raising the degree of two adjacent vertices by one: a
// clique on five fresh vertices minus two disjoint edges, with the four
// degree-deficient gadget vertices split between the two endpoints.
void bridge_matched_edge(Graph& g, int v, int w, int& next_id) {
  int base = next_id;
  next_id += 5;
  std::vector<int> clique;
  for (int i = 0; i < 5; ++i) {
    g.add_vertex(base + i);
    clique.push_back(base + i);
  }
  add_clique(g, clique);
  g.remove_edge(base, base + 1);
  g.remove_edge(base + 2, base + 3);
  g.remove_edge(v, w);
  g.add_edge(v, base);
  g.add_edge(v, base + 1);
  g.add_edge(w, base + 2);
  g.add_edge(w, base + 3);
}

}  // namespace

Graph bridge_adjacent_pair(const Graph& g, Edge e) {
  auto [u, v] = make_edge(e.first, e.second);
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
  Graph out = g;
  int next = g.max_vertex_id() + 1;
  bridge_matched_edge(out, u, v, next);
  return out;
}

FourRegularResult build_four_regular_instance(const Graph& source, const LinearOrdering& f,
                                              int grid_cols) {
  FourRegularResult res;
  int k = cutwidth_of_ordering(source, f);
  const int n = source.vertex_count();
  if (n % 2 != 0) throw std::invalid_argument("cubic graphs have an even vertex count");
  res.target_width = 3 * n + k + 2;
  res.rep_cliques = cubic::build_rep_cliques(source);
  const auto& inst = res.rep_cliques;

  const int rows = 3 * n;
  int cols = grid_cols < 0 ? 24 * n : grid_cols;
  if (cols < 3) throw std::invalid_argument("grid needs at least 3 columns");
  const int left_base = 6 * n;
  const int right_base = 6 * n + rows * cols;
  auto left_id = [&](int r, int c) { return left_base + r * cols + c; };
  auto right_id = [&](int r, int c) { return right_base + r * cols + c; };

  Graph g = inst.graph;
  for (const auto& family : {inst.vertex_clique(), inst.edge_clique()})
    for (size_t i = 0; i < family.size(); ++i)
      for (size_t j = i + 1; j < family.size(); ++j) g.remove_edge(family[i], family[j]);

  for (int side = 0; side < 2; ++side) {
    auto id = [&](int r, int c) { return side == 0 ? left_id(r, c) : right_id(r, c); };
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) g.add_vertex(id(r, c));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c + 1 < cols; ++c) g.add_edge(id(r, c), id(r, c + 1));
    for (int r = 0; r + 1 < rows; ++r)
      for (int c = 0; c < cols; ++c) g.add_edge(id(r, c), id(r + 1, c));
  }
  for (int r = 0; r < rows; ++r) {
    g.add_edge(left_id(r, cols - 1), r);
    g.add_edge(right_id(r, 0), 3 * n + r);
  }

  // the two free corners of each grid have degree 2; fold them in
  std::map<int, int> folded;
  for (int corner : {left_id(0, 0), left_id(rows - 1, 0), right_id(0, cols - 1),
                     right_id(rows - 1, cols - 1)}) {
    int target = *g.neighbors(corner).begin();
    std::vector<int> others(g.neighbors(corner).begin(), g.neighbors(corner).end());
    g.remove_vertex(corner);
    for (int w : others)
      if (w != target) g.add_edge(target, w);
    folded[corner] = target;
  }

  // remaining degree-3 grid vertices form one border path per grid; pair them
  // up along the path and bridge each pair
  int next_id = right_base + rows * cols;
  for (int side = 0; side < 2; ++side) {
    std::set<int> border;
    int lo = side == 0 ? left_base : right_base;
    int hi = lo + rows * cols;
    for (int v : g.vertices())
      if (v >= lo && v < hi && g.degree(v) == 3) border.insert(v);

    // walk the induced path from its smaller endpoint
    std::vector<int> path;
    int start = -1;
    for (int v : border) {
      int deg_in = 0;
      for (int u : g.neighbors(v))
        if (border.count(u)) ++deg_in;
      if (deg_in == 1) {
        start = v;
        break;
      }
    }
    if (start < 0) throw std::logic_error("grid border is not a path");
    int prev = -1, cur = start;
    while (true) {
      path.push_back(cur);
      int next = -1;
      for (int u : g.neighbors(cur))
        if (u != prev && border.count(u)) next = u;
      if (next == -1) break;
      prev = cur;
      cur = next;
    }
    if (path.size() != border.size() || path.size() % 2 != 0)
      throw std::logic_error("grid border does not admit a perfect matching");
    for (size_t i = 0; i + 1 < path.size(); i += 2)
      bridge_matched_edge(g, path[i], path[i + 1], next_id);
  }

  // nine-vertex replacement trees: root keeps the representative id and its
  // grid edge, two children of three leaves each, roots matched up per side
  for (int j = 0; j < inst.source_m; ++j) {
    auto [u, v] = inst.source_edges[j];
    for (int endpoint : {u, v})
      for (int a : inst.vertex_reps[endpoint])
        for (int b : inst.edge_reps[j]) g.remove_edge(a, b);
  }
  struct SmallTree {
    int child[2];
    int leaves[6];  // 0..2 under child 0
  };
  std::map<int, SmallTree> trees;
  for (int u = 0; u < 6 * n; ++u) {
    SmallTree t{};
    for (int c = 0; c < 2; ++c) {
      t.child[c] = next_id++;
      g.add_vertex(t.child[c]);
      g.add_edge(u, t.child[c]);
    }
    for (int i = 0; i < 6; ++i) {
      t.leaves[i] = next_id++;
      g.add_vertex(t.leaves[i]);
      g.add_edge(t.child[i / 3], t.leaves[i]);
    }
    trees[u] = t;
  }
  for (int base : {0, 3 * n})
    for (int r = 0; r < 3 * n; r += 2) g.add_edge(base + r, base + r + 1);

  for (int j = 0; j < inst.source_m; ++j) {
    auto [u, v] = inst.source_edges[j];
    for (int copy = 0; copy < 2; ++copy) {
      const SmallTree& edge_tree = trees.at(inst.edge_reps[j][copy]);
      for (int endpoint : {u, v}) {
        int side = endpoint == u ? 0 : 1;
        auto incident = inst.incident_edge_ids(endpoint);
        int slot = -1;
        for (int t = 0; t < 3; ++t)
          if (incident[t] == j) slot = 2 * t + copy;
        for (int a = 0; a < 3; ++a) {
          const SmallTree& vertex_tree = trees.at(inst.vertex_reps[endpoint][a]);
          g.add_edge(vertex_tree.leaves[slot], edge_tree.leaves[3 * side + a]);
        }
      }
    }
  }

  cubic::ContractionResult cr = cubic::contract_low_degree(g);
  res.graph = std::move(cr.graph);
  res.contraction_map = std::move(cr.merged_into);
  for (auto [corner, target] : folded) {
    int cur = target;
    while (res.contraction_map.count(cur) && res.contraction_map.at(cur) != cur)
      cur = res.contraction_map.at(cur);
    res.contraction_map[corner] = cur;
  }
  res.exact_width_guaranteed = (grid_cols < 0 || grid_cols == 24 * n) && n >= 22;
  return res;
}

// ---- 3-dimensional grid embedding ----

GridEmbedding embed_3d_grid(const Graph& source) {
  {
    int expect = 0;
    for (int v : source.vertices())
      if (v != expect++) throw std::invalid_argument("source vertices must be 0..n-1");
  }
  if (!is_regular(source, 3)) throw std::invalid_argument("source graph must be 3-regular");

  const int n = source.vertex_count();
  GridEmbedding emb;
  emb.dim_x = 6 * n - 1;
  emb.dim_y = 3 * n + 1;
  emb.dim_z = 3;

  std::map<Coord, int> id_of;
  auto vertex_at = [&](Coord c) {
    auto it = id_of.find(c);
    if (it != id_of.end()) return it->second;
    int id = static_cast<int>(id_of.size());
    id_of[c] = id;
    emb.graph.add_vertex(id);
    emb.coords[id] = c;
    return id;
  };
  auto connect = [&](Coord a, Coord b) { emb.graph.add_edge(vertex_at(a), vertex_at(b)); };

  // baseline path of five vertices per source vertex; ports at the even
  // offsets serve its neighbours in ascending order
  std::vector<std::array<int, 3>> port_of(n);  // neighbour index -> port offset/2
  std::vector<std::vector<int>> nbrs(n);
  for (int i = 0; i < n; ++i) {
    nbrs[i] = {source.neighbors(i).begin(), source.neighbors(i).end()};
    for (int x = 6 * i; x < 6 * i + 4; ++x)
      connect({x, 0, 0}, {x + 1, 0, 0});
  }
  emb.branch_vertices.resize(n);
  for (int i = 0; i < n; ++i) emb.branch_vertices[i] = id_of.at({6 * i + 2, 0, 0});

  auto port_x = [&](int i, int j) {
    for (int a = 0; a < 3; ++a)
      if (nbrs[i][a] == j) return 6 * i + 2 * a;
    throw std::logic_error("not a neighbour");
  };

  std::vector<Edge> edges = source.edges();
  for (int k = 1; k <= static_cast<int>(edges.size()); ++k) {
    auto [i, j] = edges[k - 1];
    int xi = port_x(i, j);
    int xj = port_x(j, i);
    for (int y = 0; y < 2 * k; ++y) {
      connect({xi, y, 0}, {xi, y + 1, 0});
      connect({xj, y, 0}, {xj, y + 1, 0});
    }
    connect({xi, 2 * k, 0}, {xi, 2 * k, 1});
    connect({xi, 2 * k, 1}, {xi, 2 * k, 2});
    connect({xj, 2 * k, 0}, {xj, 2 * k, 1});
    connect({xj, 2 * k, 1}, {xj, 2 * k, 2});
    for (int x = xi; x < xj; ++x) connect({x, 2 * k, 2}, {x + 1, 2 * k, 2});
  }
  return emb;
}

}  // namespace widthforge::special
