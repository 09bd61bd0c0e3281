#include "widthforge/cobipartite.hpp"

#include <algorithm>
#include <set>

namespace widthforge::cobipartite {

std::vector<int> Instance::original_side() const {
  std::vector<int> out(source_n);
  for (int v = 0; v < source_n; ++v) out[v] = v;
  return out;
}

std::vector<int> Instance::mirror_side() const {
  std::vector<int> out(source_n);
  for (int v = 0; v < source_n; ++v) out[v] = v + source_n;
  return out;
}

namespace {

void require_dense_ids(const Graph& g) {
  int expect = 0;
  for (int v : g.vertices())
    if (v != expect++) throw std::invalid_argument("source vertices must be 0..n-1");
}

}  // namespace

Instance build_instance(const Graph& source) {
  require_dense_ids(source);
  Instance inst;
  inst.source_n = source.vertex_count();
  const int n = inst.source_n;
  inst.graph = Graph::with_vertex_count(2 * n);
  add_clique(inst.graph, inst.original_side());
  add_clique(inst.graph, inst.mirror_side());
  for (int v = 0; v < n; ++v) inst.graph.add_edge(v, v + n);
  for (auto [u, v] : source.edges()) {
    inst.graph.add_edge(u, v + n);
    inst.graph.add_edge(v, u + n);
  }
  return inst;
}

PathDecomposition lift_path_decomposition(const Instance& inst, const Graph& source,
                                          const PathDecomposition& pd) {
  verify_path_decomposition(source, pd);
  const int n = inst.source_n;
  const int r = static_cast<int>(pd.bags.size());

  // seen_at_or_after[i] / seen_at_or_before[i] as vertex sets
  std::vector<std::set<int>> suffix(r), prefix(r);
  for (int i = r - 1; i >= 0; --i) {
    if (i + 1 < r) suffix[i] = suffix[i + 1];
    suffix[i].insert(pd.bags[i].begin(), pd.bags[i].end());
  }
  for (int i = 0; i < r; ++i) {
    if (i > 0) prefix[i] = prefix[i - 1];
    prefix[i].insert(pd.bags[i].begin(), pd.bags[i].end());
  }

  PathDecomposition out;
  for (int i = 0; i < r; ++i) {
    std::vector<int> bag(suffix[i].begin(), suffix[i].end());
    for (int v : prefix[i]) bag.push_back(v + n);
    std::sort(bag.begin(), bag.end());
    out.bags.push_back(std::move(bag));
  }
  return out;
}

PathDecomposition project_path_decomposition(const Instance& inst, const Graph& source,
                                             const PathDecomposition& pd) {
  verify_path_decomposition(inst.graph, pd);
  const int n = inst.source_n;
  auto contains_all = [](const std::vector<int>& bag, const std::vector<int>& want) {
    return std::includes(bag.begin(), bag.end(), want.begin(), want.end());
  };
  if (pd.bags.empty() || !contains_all(pd.bags.front(), inst.original_side()) ||
      !contains_all(pd.bags.back(), inst.mirror_side()))
    throw std::invalid_argument(
        "projection needs the original side in the first bag and the mirror side in the last");

  PathDecomposition out;
  for (const auto& bag : pd.bags) {
    std::set<int> members(bag.begin(), bag.end());
    std::vector<int> projected;
    for (int v : bag)
      if (v < n && members.count(v + n)) projected.push_back(v);
    out.bags.push_back(std::move(projected));
  }
  return out;
}

PathDecomposition project_tree_decomposition(const Instance& inst, const Graph& source,
                                             const TreeDecomposition& td) {
  PathDecomposition pd =
      pathify_between_cliques(inst.graph, td, inst.original_side(), inst.mirror_side());
  return project_path_decomposition(inst, source, pd);
}

}  // namespace widthforge::cobipartite
