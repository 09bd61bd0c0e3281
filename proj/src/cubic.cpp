#include "widthforge/cubic.hpp"

#include <algorithm>
#include <set>

namespace widthforge::cubic {

namespace {

void require_dense_cubic(const Graph& g) {
  int expect = 0;
  for (int v : g.vertices())
    if (v != expect++) throw std::invalid_argument("source vertices must be 0..n-1");
  if (!is_regular(g, 3)) throw std::invalid_argument("source graph must be 3-regular");
}

}  // namespace

std::vector<int> RepCliqueInstance::vertex_clique() const {
  std::vector<int> out;
  for (const auto& reps : vertex_reps) out.insert(out.end(), reps.begin(), reps.end());
  return out;
}

std::vector<int> RepCliqueInstance::edge_clique() const {
  std::vector<int> out;
  for (const auto& reps : edge_reps) out.insert(out.end(), reps.begin(), reps.end());
  return out;
}

std::vector<int> RepCliqueInstance::incident_edge_ids(int v) const {
  std::vector<int> out;
  for (int j = 0; j < source_m; ++j)
    if (source_edges[j].first == v || source_edges[j].second == v) out.push_back(j);
  return out;
}

RepCliqueInstance build_rep_cliques(const Graph& source) {
  require_dense_cubic(source);
  RepCliqueInstance inst;
  inst.source_n = source.vertex_count();
  inst.source_m = source.edge_count();
  inst.source_edges = source.edges();
  const int n = inst.source_n;

  inst.graph = Graph::with_vertex_count(3 * n + 2 * inst.source_m);
  for (int v = 0; v < n; ++v) inst.vertex_reps.push_back({3 * v, 3 * v + 1, 3 * v + 2});
  for (int j = 0; j < inst.source_m; ++j)
    inst.edge_reps.push_back({3 * n + 2 * j, 3 * n + 2 * j + 1});

  add_clique(inst.graph, inst.vertex_clique());
  add_clique(inst.graph, inst.edge_clique());
  for (int j = 0; j < inst.source_m; ++j) {
    auto [u, v] = inst.source_edges[j];
    for (int endpoint : {u, v})
      for (int a : inst.vertex_reps[endpoint])
        for (int b : inst.edge_reps[j]) inst.graph.add_edge(a, b);
  }
  return inst;
}

PathDecomposition ordering_pathdec(const RepCliqueInstance& inst, const LinearOrdering& f) {
  const int n = inst.source_n;
  if (static_cast<int>(f.order.size()) != n)
    throw std::invalid_argument("ordering is not a permutation of the source vertices");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = f.order[i];
    if (v < 0 || v >= n || pos[v] != -1)
      throw std::invalid_argument("ordering is not a permutation of the source vertices");
    pos[v] = i;
  }

  PathDecomposition out;
  for (int i = 0; i < n; ++i) {
    std::vector<int> bag;
    for (int v = 0; v < n; ++v)
      if (pos[v] >= i)
        bag.insert(bag.end(), inst.vertex_reps[v].begin(), inst.vertex_reps[v].end());
    for (int j = 0; j < inst.source_m; ++j) {
      auto [u, v] = inst.source_edges[j];
      if (std::min(pos[u], pos[v]) <= i)
        bag.insert(bag.end(), inst.edge_reps[j].begin(), inst.edge_reps[j].end());
    }
    std::sort(bag.begin(), bag.end());
    out.bags.push_back(std::move(bag));
  }
  return out;
}

LinearOrdering extract_ordering(const RepCliqueInstance& inst, const TreeDecomposition& td) {
  PathDecomposition pd =
      pathify_between_cliques(inst.graph, td, inst.vertex_clique(), inst.edge_clique());
  const int n = inst.source_n;

  std::vector<std::pair<int, int>> keyed;  // (last position with all three reps, vertex)
  for (int v = 0; v < n; ++v) {
    int last = -1;
    for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
      const auto& bag = pd.bags[i];
      bool all3 = true;
      for (int rep : inst.vertex_reps[v])
        if (!std::binary_search(bag.begin(), bag.end(), rep)) {
          all3 = false;
          break;
        }
      if (all3) last = i;
    }
    if (last < 0) throw std::runtime_error("representatives missing from first bag");
    keyed.emplace_back(last, v);
  }
  std::sort(keyed.begin(), keyed.end());
  LinearOrdering out;
  for (auto [_, v] : keyed) out.order.push_back(v);
  return out;
}

// ---- brick walls ----

BrickWall build_brick_wall(int rows, int cols, int base_id) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("wall needs at least 2 rows and columns");
  BrickWall wall;
  wall.rows = rows;
  wall.cols = cols;
  wall.base_id = base_id;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) wall.graph.add_vertex(wall.id_at(r, c));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) wall.graph.add_edge(wall.id_at(r, c), wall.id_at(r, c + 1));
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if ((r + c) % 2 == 0) wall.graph.add_edge(wall.id_at(r, c), wall.id_at(r + 1, c));
  return wall;
}

std::vector<int> BrickWall::column(int col) const {
  std::vector<int> out;
  for (int r = 0; r < rows; ++r) out.push_back(id_at(r, col));
  return out;
}

PathDecomposition brick_wall_pathdec(const BrickWall& wall) {
  PathDecomposition out;
  std::vector<int> first = wall.column(0);
  std::set<int> bag(first.begin(), first.end());
  out.bags.emplace_back(bag.begin(), bag.end());
  for (int c = 0; c + 1 < wall.cols; ++c) {
    for (int r = 0; r < wall.rows; ++r) {
      bag.insert(wall.id_at(r, c + 1));
      out.bags.emplace_back(bag.begin(), bag.end());
      bag.erase(wall.id_at(r, c));
      out.bags.emplace_back(bag.begin(), bag.end());
    }
  }
  return out;
}

// ---- wall stage ----

WallStage attach_walls(const RepCliqueInstance& inst, int cols) {
  const int n = inst.source_n;
  const int rows = 3 * n;
  if (cols < 0) cols = 24 * n;
  if (cols < 2) throw std::invalid_argument("wall needs at least 2 columns");
  if (2 * inst.source_m != 3 * n)
    throw std::invalid_argument("instance does not come from a cubic source");

  WallStage ws;
  ws.rows = rows;
  ws.cols = cols;
  ws.left_base = 6 * n;
  ws.right_base = 6 * n + rows * cols;

  ws.graph = inst.graph;
  // drop the two representative cliques, keep the joins
  for (const auto& family : {inst.vertex_clique(), inst.edge_clique()})
    for (size_t i = 0; i < family.size(); ++i)
      for (size_t j = i + 1; j < family.size(); ++j) ws.graph.remove_edge(family[i], family[j]);

  BrickWall left = build_brick_wall(rows, cols, ws.left_base);
  BrickWall right = build_brick_wall(rows, cols, ws.right_base);
  for (const BrickWall* wall : {&left, &right}) {
    for (int v : wall->graph.vertices()) ws.graph.add_vertex(v);
    for (auto [u, v] : wall->graph.edges()) ws.graph.add_edge(u, v);
  }
  for (int r = 0; r < rows; ++r) {
    ws.graph.add_edge(ws.left_id(r, cols - 1), r);           // vertex representative r
    ws.graph.add_edge(ws.right_id(r, 0), 3 * n + r);         // edge representative 3n+r
  }
  return ws;
}

PathDecomposition lift_to_wall_stage(const RepCliqueInstance& inst, const WallStage& ws,
                                     const PathDecomposition& pd) {
  const int n = inst.source_n;
  const int rows = ws.rows;
  int width = verify_path_decomposition(inst.graph, pd);
  auto contains_all = [](const std::vector<int>& bag, const std::vector<int>& want) {
    return std::includes(bag.begin(), bag.end(), want.begin(), want.end());
  };
  if (!contains_all(pd.bags.front(), inst.vertex_clique()) ||
      !contains_all(pd.bags.back(), inst.edge_clique()))
    throw std::invalid_argument(
        "lift needs the vertex representatives first and the edge representatives last");
  if (width < 3 * n) throw std::invalid_argument("input width below the wall row count");

  PathDecomposition out;
  auto sweep = [&](int base, bool leftward_done) {
    // column sweep of one wall, appending to out
    BrickWall shape;
    shape.rows = rows;
    shape.cols = ws.cols;
    shape.base_id = base;
    PathDecomposition wallpd = brick_wall_pathdec(shape);
    for (auto& bag : wallpd.bags) out.bags.push_back(std::move(bag));
  };

  // left wall, then hand over column cols-1 to the vertex representatives
  sweep(ws.left_base, false);
  std::set<int> bag;
  for (int r = 0; r < rows; ++r) bag.insert(ws.left_id(r, ws.cols - 1));
  for (int r = 0; r < rows; ++r) {
    bag.insert(r);
    out.bags.emplace_back(bag.begin(), bag.end());
    bag.erase(ws.left_id(r, ws.cols - 1));
    out.bags.emplace_back(bag.begin(), bag.end());
  }

  for (const auto& b : pd.bags) out.bags.push_back(b);

  // hand over the edge representatives to column 0 of the right wall
  bag.clear();
  for (int r = 0; r < rows; ++r) bag.insert(3 * n + r);
  out.bags.emplace_back(bag.begin(), bag.end());
  for (int r = 0; r < rows; ++r) {
    bag.insert(ws.right_id(r, 0));
    out.bags.emplace_back(bag.begin(), bag.end());
    bag.erase(3 * n + r);
    out.bags.emplace_back(bag.begin(), bag.end());
  }
  sweep(ws.right_base, true);
  return out;
}

// ---- tree stage ----

std::vector<int> GadgetTree::all() const {
  std::vector<int> out{root, left_child, right_child, left_inner, right_inner};
  out.insert(out.end(), leaves.begin(), leaves.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> GadgetTree::side_closure(int side) const {
  std::vector<int> out{root};
  if (side == 0) {
    out.push_back(left_child);
    out.push_back(left_inner);
    out.insert(out.end(), {leaves[0], leaves[1], leaves[2]});
  } else {
    out.push_back(right_child);
    out.push_back(right_inner);
    out.insert(out.end(), {leaves[3], leaves[4], leaves[5]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeStage expand_to_trees(const RepCliqueInstance& inst, const WallStage& ws) {
  const int n = inst.source_n;
  const int reps = 6 * n;
  const int fresh_base = ws.right_base + ws.rows * ws.cols;

  TreeStage ts;
  ts.graph = ws.graph;
  // representative-to-representative joins become leaf edges below
  for (int j = 0; j < inst.source_m; ++j) {
    auto [u, v] = inst.source_edges[j];
    for (int endpoint : {u, v})
      for (int a : inst.vertex_reps[endpoint])
        for (int b : inst.edge_reps[j]) ts.graph.remove_edge(a, b);
  }

  for (int u = 0; u < reps; ++u) {
    GadgetTree t;
    int base = fresh_base + 10 * u;
    t.root = u;
    t.left_child = base;
    t.right_child = base + 1;
    t.left_inner = base + 2;
    t.right_inner = base + 3;
    for (int i = 0; i < 6; ++i) t.leaves[i] = base + 4 + i;
    for (int i = 0; i < 10; ++i) ts.graph.add_vertex(base + i);
    ts.graph.add_edge(t.root, t.left_child);
    ts.graph.add_edge(t.root, t.right_child);
    ts.graph.add_edge(t.left_child, t.left_inner);
    ts.graph.add_edge(t.left_child, t.leaves[2]);
    ts.graph.add_edge(t.left_inner, t.leaves[0]);
    ts.graph.add_edge(t.left_inner, t.leaves[1]);
    ts.graph.add_edge(t.right_child, t.right_inner);
    ts.graph.add_edge(t.right_child, t.leaves[5]);
    ts.graph.add_edge(t.right_inner, t.leaves[3]);
    ts.graph.add_edge(t.right_inner, t.leaves[4]);
    ts.gadgets[u] = t;
  }

  // one leaf-to-leaf edge per former join edge
  for (int j = 0; j < inst.source_m; ++j) {
    auto [u, v] = inst.source_edges[j];
    for (int copy = 0; copy < 2; ++copy) {
      const GadgetTree& edge_tree = ts.gadgets.at(inst.edge_reps[j][copy]);
      for (int endpoint : {u, v}) {
        int side = endpoint == u ? 0 : 1;  // source_edges stores first < second
        auto incident = inst.incident_edge_ids(endpoint);
        int slot = -1;
        for (int t = 0; t < 3; ++t)
          if (incident[t] == j) slot = 2 * t + copy;
        for (int a = 0; a < 3; ++a) {
          const GadgetTree& vertex_tree = ts.gadgets.at(inst.vertex_reps[endpoint][a]);
          ts.graph.add_edge(vertex_tree.leaves[slot], edge_tree.leaves[3 * side + a]);
        }
      }
    }
  }
  return ts;
}

TreeDecomposition lift_to_tree_stage(const RepCliqueInstance& inst, const TreeStage& ts,
                                     const PathDecomposition& pd, bool allow_width_growth) {
  const int n = inst.source_n;
  int width = pd.width();
  if (width < 68 && !allow_width_growth)
    throw std::invalid_argument(
        "width below 68: the leaf gadget bags would raise the width; pass allow_width_growth "
        "to build the decomposition anyway");

  TreeDecomposition td = pd.to_tree();
  int next_node = static_cast<int>(pd.bags.size());

  for (int v = 0; v < n; ++v) {
    std::vector<int> needed;
    for (int rep : inst.vertex_reps[v]) needed.push_back(rep);
    for (int j : inst.incident_edge_ids(v))
      for (int rep : inst.edge_reps[j]) needed.push_back(rep);
    std::sort(needed.begin(), needed.end());

    int host = -1;
    for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i)
      if (std::includes(pd.bags[i].begin(), pd.bags[i].end(), needed.begin(), needed.end())) {
        host = i;
        break;
      }
    if (host < 0)
      throw std::invalid_argument(
          "no bag holds all representatives of a source vertex and its incident edges");

    std::vector<int> bag;
    for (int rep : inst.vertex_reps[v]) {
      auto whole = ts.gadgets.at(rep).all();
      bag.insert(bag.end(), whole.begin(), whole.end());
    }
    for (int j : inst.incident_edge_ids(v)) {
      int side = inst.source_edges[j].first == v ? 0 : 1;
      for (int rep : inst.edge_reps[j]) {
        auto part = ts.gadgets.at(rep).side_closure(side);
        bag.insert(bag.end(), part.begin(), part.end());
      }
    }
    std::sort(bag.begin(), bag.end());
    td.tree.add_vertex(next_node);
    td.bags[next_node] = std::move(bag);
    td.tree.add_edge(next_node, host);
    ++next_node;
  }
  return td;
}

// ---- contraction ----

ContractionResult contract_low_degree(const Graph& g) {
  std::map<int, std::set<int>> adj;
  for (int v : g.vertices()) adj[v] = g.neighbors(v);
  std::map<int, int> merged;

  std::set<int> pending;
  for (const auto& [v, nbrs] : adj)
    if (nbrs.size() >= 1 && nbrs.size() <= 2) pending.insert(v);

  while (!pending.empty()) {
    int v = *pending.begin();
    pending.erase(pending.begin());
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    auto& nbrs = it->second;
    if (nbrs.empty() || nbrs.size() > 2) continue;
    if (adj.size() <= 1) throw std::invalid_argument("contraction would collapse the whole graph");

    int target = *nbrs.begin();
    std::vector<int> others(nbrs.begin(), nbrs.end());
    for (int w : others) adj[w].erase(v);
    adj.erase(it);
    merged[v] = target;
    for (int w : others)
      if (w != target) {
        adj[target].insert(w);
        adj[w].insert(target);
      }
    for (int w : others) {
      size_t d = adj[w].size();
      if (d >= 1 && d <= 2)
        pending.insert(w);
      else
        pending.erase(w);
    }
  }

  if (adj.size() <= 1 && g.vertex_count() > 1)
    throw std::invalid_argument("contraction would collapse the whole graph");
  ContractionResult cr;
  for (const auto& [v, nbrs] : adj) {
    cr.graph.add_vertex(v);
    if (nbrs.empty() && adj.size() > 1)
      throw std::invalid_argument("contraction left an isolated vertex");
  }
  for (const auto& [v, nbrs] : adj)
    for (int u : nbrs)
      if (v < u) cr.graph.add_edge(v, u);

  // compress merge chains to the surviving representative
  for (int v : g.vertices()) {
    int cur = v;
    while (merged.count(cur)) cur = merged.at(cur);
    cr.merged_into[v] = cur;
  }
  return cr;
}

MinorWitness witness_from_contraction(const ContractionResult& cr) {
  MinorWitness w;
  for (const auto& [v, target] : cr.merged_into) w.branch_sets[target].push_back(v);
  return w;
}

TreeDecomposition rename_through_contraction(const TreeDecomposition& td,
                                             const std::map<int, int>& merged_into) {
  TreeDecomposition out;
  out.tree = td.tree;
  for (const auto& [node, bag] : td.bags) {
    std::set<int> renamed;
    for (int v : bag) renamed.insert(merged_into.at(v));
    out.bags[node] = std::vector<int>(renamed.begin(), renamed.end());
  }
  return out;
}

// ---- pipeline ----

PipelineResult reduce_cutwidth_to_treewidth(const Graph& source, const LinearOrdering& f,
                                            int wall_cols) {
  PipelineResult res;
  int k = cutwidth_of_ordering(source, f);
  const int n = source.vertex_count();
  res.target_width = 3 * n + k + 2;

  res.rep_cliques = build_rep_cliques(source);
  PathDecomposition pd1 = ordering_pathdec(res.rep_cliques, f);

  res.wall_stage = attach_walls(res.rep_cliques, wall_cols);
  PathDecomposition pd2 = lift_to_wall_stage(res.rep_cliques, res.wall_stage, pd1);

  res.tree_stage = expand_to_trees(res.rep_cliques, res.wall_stage);
  TreeDecomposition td3 =
      lift_to_tree_stage(res.rep_cliques, res.tree_stage, pd2, /*allow_width_growth=*/true);

  ContractionResult cr = contract_low_degree(res.tree_stage.graph);
  res.graph = std::move(cr.graph);
  res.contraction_map = std::move(cr.merged_into);
  res.certificate = rename_through_contraction(td3, res.contraction_map);

  res.exact_width_guaranteed = (wall_cols < 0 || wall_cols == 24 * n) && n >= 22;
  return res;
}

}  // namespace widthforge::cubic
