#include "widthforge/decomposition.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace widthforge {

namespace {

int width_of_bags(const std::vector<const std::vector<int>*>& bags) {
  size_t m = 0;
  for (const auto* b : bags) m = std::max(m, b->size());
  return static_cast<int>(m) - 1;
}

}  // namespace

int TreeDecomposition::width() const {
  size_t m = 0;
  for (const auto& [_, b] : bags) m = std::max(m, b.size());
  return static_cast<int>(m) - 1;
}

int PathDecomposition::width() const {
  size_t m = 0;
  for (const auto& b : bags) m = std::max(m, b.size());
  return static_cast<int>(m) - 1;
}

TreeDecomposition PathDecomposition::to_tree() const {
  TreeDecomposition td;
  for (int i = 0; i < static_cast<int>(bags.size()); ++i) {
    td.tree.add_vertex(i);
    td.bags[i] = bags[i];
    if (i > 0) td.tree.add_edge(i - 1, i);
  }
  return td;
}

std::string Violation::describe() const {
  switch (axiom) {
    case Axiom::TreeShape:
      return "decomposition tree is not a nonempty tree";
    case Axiom::VertexUnknown:
      return "bag " + std::to_string(node) + " contains unknown vertex " + std::to_string(vertex);
    case Axiom::VertexCoverage:
      return "vertex " + std::to_string(vertex) + " appears in no bag";
    case Axiom::EdgeCoverage:
      return "edge {" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
             "} is in no bag";
    case Axiom::Connectivity:
      return "occurrences of vertex " + std::to_string(vertex) + " are not connected";
  }
  return "unknown violation";
}

CheckResult check_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  CheckResult res;
  const int nodes = td.tree.vertex_count();
  if (nodes == 0 || td.tree.edge_count() != nodes - 1 || !is_connected(td.tree) ||
      static_cast<int>(td.bags.size()) != nodes) {
    res.violation = Violation{Axiom::TreeShape};
    return res;
  }
  for (const auto& [node, _] : td.bags)
    if (!td.tree.has_vertex(node)) {
      res.violation = Violation{Axiom::TreeShape};
      return res;
    }

  size_t maxbag = 0;
  std::unordered_map<int, std::vector<int>> occurrences;  // vertex -> nodes, ascending
  for (const auto& [node, bag] : td.bags) {
    maxbag = std::max(maxbag, bag.size());
    for (int v : bag) {
      if (!g.has_vertex(v)) {
        res.violation = Violation{Axiom::VertexUnknown, v, {-1, -1}, node};
        return res;
      }
      occurrences[v].push_back(node);
    }
  }
  res.width = static_cast<int>(maxbag) - 1;

  for (int v : g.vertices())
    if (!occurrences.count(v)) {
      res.violation = Violation{Axiom::VertexCoverage, v};
      return res;
    }

  for (auto [u, v] : g.edges()) {
    const auto& a = occurrences[u];
    const auto& b = occurrences[v];
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    std::unordered_set<int> in_large(large.begin(), large.end());
    bool found = false;
    for (int node : small)
      if (in_large.count(node)) {
        found = true;
        break;
      }
    if (!found) {
      res.violation = Violation{Axiom::EdgeCoverage, -1, {u, v}};
      return res;
    }
  }

  for (const auto& [v, occ] : occurrences) {
    if (occ.size() == 1) continue;
    std::unordered_set<int> members(occ.begin(), occ.end());
    std::unordered_set<int> seen{occ.front()};
    std::queue<int> q;
    q.push(occ.front());
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : td.tree.neighbors(x))
        if (members.count(y) && seen.insert(y).second) q.push(y);
    }
    if (seen.size() != occ.size()) {
      res.violation = Violation{Axiom::Connectivity, v};
      return res;
    }
  }
  return res;
}

CheckResult check_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  CheckResult res;
  const int n = static_cast<int>(pd.bags.size());
  if (n == 0) {
    res.violation = Violation{Axiom::TreeShape};
    return res;
  }

  struct Interval {
    int first = -1, last = -1, count = 0;
  };
  std::unordered_map<int, Interval> span;
  std::vector<const std::vector<int>*> bagptrs;
  for (int i = 0; i < n; ++i) {
    bagptrs.push_back(&pd.bags[i]);
    for (int v : pd.bags[i]) {
      if (!g.has_vertex(v)) {
        res.violation = Violation{Axiom::VertexUnknown, v, {-1, -1}, i};
        return res;
      }
      auto& iv = span[v];
      if (iv.count == 0) iv.first = i;
      iv.last = i;
      ++iv.count;
    }
  }
  res.width = width_of_bags(bagptrs);

  for (int v : g.vertices())
    if (!span.count(v)) {
      res.violation = Violation{Axiom::VertexCoverage, v};
      return res;
    }
  for (const auto& [v, iv] : span)
    if (iv.count != iv.last - iv.first + 1) {
      res.violation = Violation{Axiom::Connectivity, v};
      return res;
    }
  for (auto [u, v] : g.edges()) {
    const auto& a = span[u];
    const auto& b = span[v];
    if (std::max(a.first, b.first) > std::min(a.last, b.last)) {
      res.violation = Violation{Axiom::EdgeCoverage, -1, {u, v}};
      return res;
    }
  }
  return res;
}

int verify_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  CheckResult res = check_tree_decomposition(g, td);
  if (!res.ok()) throw DecompositionError(*res.violation);
  return res.width;
}

int verify_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  CheckResult res = check_path_decomposition(g, pd);
  if (!res.ok()) throw DecompositionError(*res.violation);
  return res.width;
}

bool is_permutation_of(const Graph& g, const LinearOrdering& f) {
  if (static_cast<int>(f.order.size()) != g.vertex_count()) return false;
  std::set<int> seen;
  for (int v : f.order) {
    if (!g.has_vertex(v)) return false;
    if (!seen.insert(v).second) return false;
  }
  return true;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i) {
    if (!g.has_vertex(vs[i])) return false;
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  }
  return true;
}

int cutwidth_of_ordering(const Graph& g, const LinearOrdering& f) {
  if (!is_permutation_of(g, f)) throw std::invalid_argument("ordering is not a permutation of V");
  const int n = static_cast<int>(f.order.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[f.order[i]] = i;
  std::vector<int> diff(n + 1, 0);
  for (auto [u, v] : g.edges()) {
    int a = std::min(pos[u], pos[v]);
    int b = std::max(pos[u], pos[v]);
    diff[a] += 1;  // crosses cuts a..b-1 (cut i separates prefix of length i+1)
    diff[b] -= 1;
  }
  int best = 0, cur = 0;
  for (int i = 0; i < n; ++i) {
    cur += diff[i];
    best = std::max(best, cur);
  }
  return best;
}

int vertex_separation_of_ordering(const Graph& g, const LinearOrdering& f) {
  if (!is_permutation_of(g, f)) throw std::invalid_argument("ordering is not a permutation of V");
  const int n = static_cast<int>(f.order.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[f.order[i]] = i;
  std::set<int> active;  // later vertices with a neighbour in the prefix
  int best = 0;
  for (int i = 0; i < n; ++i) {
    int u = f.order[i];
    active.erase(u);
    for (int w : g.neighbors(u))
      if (pos[w] > i) active.insert(w);
    best = std::max(best, static_cast<int>(active.size()));
  }
  return best;
}

int find_clique_bag(const Graph& g, const TreeDecomposition& td, const std::vector<int>& clique) {
  if (!is_clique(g, clique)) throw std::invalid_argument("given vertex set is not a clique");
  for (const auto& [node, bag] : td.bags)
    if (std::includes(bag.begin(), bag.end(), clique.begin(), clique.end())) return node;
  throw std::runtime_error("no bag contains the clique; decomposition is invalid");
}

namespace {

bool balanced_with_bound(const Graph& g, const TreeDecomposition& td, int node,
                         const std::vector<int>& targets, int bound) {
  const auto& bag = td.bags.at(node);
  std::set<int> excluded(bag.begin(), bag.end());
  std::set<int> targetset(targets.begin(), targets.end());
  for (const auto& comp : components_excluding(g, excluded)) {
    int cnt = 0;
    for (int v : comp)
      if (targetset.count(v)) ++cnt;
    if (cnt > bound) return false;
  }
  return true;
}

}  // namespace

bool bag_is_balanced_for(const Graph& g, const TreeDecomposition& td, int node,
                         const std::vector<int>& targets) {
  int bound = (static_cast<int>(targets.size()) + 1) / 2;
  return balanced_with_bound(g, td, node, targets, bound);
}

BalancedBag find_balanced_bag(const Graph& g, const TreeDecomposition& td,
                              const std::vector<int>& targets) {
  for (const auto& [node, _] : td.bags)
    if (bag_is_balanced_for(g, td, node, targets)) return {node, false};
  int weak = g.vertex_count() / 2;
  for (const auto& [node, _] : td.bags)
    if (balanced_with_bound(g, td, node, targets, weak)) return {node, true};
  throw std::runtime_error("no balanced bag exists; decomposition is invalid");
}

TreeDecomposition prune_subsumed_leaves(const TreeDecomposition& td) {
  TreeDecomposition out = td;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int node : out.tree.vertices()) {
      if (out.tree.degree(node) != 1) continue;
      int nb = *out.tree.neighbors(node).begin();
      const auto& leafbag = out.bags.at(node);
      const auto& nbbag = out.bags.at(nb);
      if (std::includes(nbbag.begin(), nbbag.end(), leafbag.begin(), leafbag.end())) {
        out.tree.remove_vertex(node);
        out.bags.erase(node);
        changed = true;
        break;
      }
    }
  }
  return out;
}

PathDecomposition pathify_between_cliques(const Graph& g, const TreeDecomposition& td,
                                          const std::vector<int>& a, const std::vector<int>& b) {
  verify_tree_decomposition(g, td);
  int x = find_clique_bag(g, td, a);
  int y = find_clique_bag(g, td, b);

  // nodes on the tree path from x to y
  std::map<int, int> parent;
  std::queue<int> q;
  q.push(x);
  parent[x] = x;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == y) break;
    for (int w : td.tree.neighbors(u))
      if (!parent.count(w)) {
        parent[w] = u;
        q.push(w);
      }
  }
  std::set<int> on_path;
  for (int u = y;; u = parent.at(u)) {
    on_path.insert(u);
    if (u == x) break;
  }

  TreeDecomposition work = td;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int node : work.tree.vertices()) {
      if (on_path.count(node) || work.tree.degree(node) != 1) continue;
      int nb = *work.tree.neighbors(node).begin();
      const auto& leafbag = work.bags.at(node);
      const auto& nbbag = work.bags.at(nb);
      if (!std::includes(nbbag.begin(), nbbag.end(), leafbag.begin(), leafbag.end()))
        throw std::runtime_error(
            "cannot pathify: off-path leaf bag is not absorbed by its neighbour (the two "
            "cliques do not cover the graph)");
      work.tree.remove_vertex(node);
      work.bags.erase(node);
      changed = true;
      break;
    }
  }

  PathDecomposition out;
  int prev = -1, cur = x;
  for (;;) {
    out.bags.push_back(work.bags.at(cur));
    if (cur == y) break;
    int next = -1;
    for (int w : work.tree.neighbors(cur))
      if (w != prev) next = w;
    prev = cur;
    cur = next;
  }
  return out;
}

PathDecomposition path_from_tree(const TreeDecomposition& td) {
  const int nodes = td.tree.vertex_count();
  if (nodes == 0) throw std::invalid_argument("empty decomposition");
  PathDecomposition out;
  if (nodes == 1) {
    out.bags.push_back(td.bags.begin()->second);
    return out;
  }
  std::vector<int> ends;
  for (int v : td.tree.vertices()) {
    if (td.tree.degree(v) > 2) throw std::invalid_argument("decomposition tree is not a path");
    if (td.tree.degree(v) == 1) ends.push_back(v);
  }
  if (ends.size() != 2 || !is_connected(td.tree))
    throw std::invalid_argument("decomposition tree is not a path");
  int prev = -1, cur = ends.front();
  while (true) {
    out.bags.push_back(td.bags.at(cur));
    int next = -1;
    for (int w : td.tree.neighbors(cur))
      if (w != prev) next = w;
    if (next == -1) break;
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace widthforge
