#include "widthforge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace widthforge {

Graph Graph::with_vertex_count(int n) {
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g = with_vertex_count(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_vertex(int v) { adj_.try_emplace(v); }

const std::set<int>& Graph::checked(int v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return it->second;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  checked(u);
  checked(v);
  if (adj_[u].insert(v).second) {
    adj_[v].insert(u);
    ++edge_count_;
  }
}

void Graph::remove_edge(int u, int v) {
  if (adj_.count(u) && adj_[u].erase(v)) {
    adj_[v].erase(u);
    --edge_count_;
  }
}

void Graph::remove_vertex(int v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  edge_count_ -= static_cast<int>(it->second.size());
  for (int u : it->second) adj_[u].erase(v);
  adj_.erase(it);
}

bool Graph::has_edge(int u, int v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

int Graph::degree(int v) const { return static_cast<int>(checked(v).size()); }

const std::set<int>& Graph::neighbors(int v) const { return checked(v); }

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, nbrs] : adj_)
    for (int u : nbrs)
      if (v < u) out.emplace_back(v, u);
  return out;
}

int Graph::max_vertex_id() const {
  if (adj_.empty()) throw std::invalid_argument("empty graph has no vertices");
  return adj_.rbegin()->first;
}

int Graph::min_vertex_id() const {
  if (adj_.empty()) throw std::invalid_argument("empty graph has no vertices");
  return adj_.begin()->first;
}

Graph contract_into_neighbor(const Graph& g, int v) {
  int d = g.degree(v);  // also checks v exists
  if (d == 0) throw std::invalid_argument("cannot contract isolated vertex " + std::to_string(v));
  if (d > 2) throw std::invalid_argument("vertex " + std::to_string(v) + " has degree > 2");
  int target = *g.neighbors(v).begin();
  Graph out = g;
  std::vector<int> others(g.neighbors(v).begin(), g.neighbors(v).end());
  out.remove_vertex(v);
  for (int w : others)
    if (w != target) out.add_edge(target, w);
  return out;
}

Graph subdivide_edge(const Graph& g, Edge e) {
  auto [u, v] = make_edge(e.first, e.second);
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
  Graph out = g;
  int mid = g.max_vertex_id() + 1;
  out.remove_edge(u, v);
  out.add_vertex(mid);
  out.add_edge(u, mid);
  out.add_edge(mid, v);
  return out;
}

bool verify_minor_witness(const Graph& host, const Graph& minor, const MinorWitness& w) {
  std::map<int, int> owner;  // host vertex -> minor vertex
  for (const auto& [mv, set] : w.branch_sets) {
    if (!minor.has_vertex(mv))
      throw std::invalid_argument("witness names unknown minor vertex " + std::to_string(mv));
    if (set.empty()) return false;
    for (int hv : set) {
      if (!host.has_vertex(hv))
        throw std::invalid_argument("witness names unknown host vertex " + std::to_string(hv));
      if (!owner.emplace(hv, mv).second) return false;  // overlap
    }
  }
  for (int mv : minor.vertices())
    if (!w.branch_sets.count(mv)) return false;

  // each branch set induces a connected host subgraph
  for (const auto& [mv, set] : w.branch_sets) {
    std::set<int> members(set.begin(), set.end());
    std::set<int> seen{*members.begin()};
    std::queue<int> q;
    q.push(*members.begin());
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : host.neighbors(x))
        if (members.count(y) && seen.insert(y).second) q.push(y);
    }
    if (seen.size() != members.size()) return false;
  }

  for (auto [a, b] : minor.edges()) {
    bool found = false;
    for (int hv : w.branch_sets.at(a)) {
      for (int hu : host.neighbors(hv)) {
        auto it = owner.find(hu);
        if (it != owner.end() && it->second == b) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

bool is_regular(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  for (int v : g.vertices())
    if (g.degree(v) != d) return false;
  return true;
}

std::vector<std::vector<int>> components_excluding(const Graph& g, const std::set<int>& excluded) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int v : g.vertices()) {
    if (excluded.count(v) || seen.count(v)) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(v);
    seen.insert(v);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      comp.push_back(x);
      for (int y : g.neighbors(x))
        if (!excluded.count(y) && seen.insert(y).second) q.push(y);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  return components_excluding(g, {});
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

void add_clique(Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  int n = a.vertex_count();
  if (n > 10) throw std::invalid_argument("isomorphism test limited to 10 vertices");
  std::vector<int> va = a.vertices(), vb = b.vertices();

  auto degrees = [](const Graph& g, const std::vector<int>& vs) {
    std::vector<int> d;
    for (int v : vs) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a, va) != degrees(b, vb)) return false;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (a.degree(va[i]) != b.degree(vb[perm[i]])) ok = false;
    if (!ok) continue;
    std::map<int, int> f;
    for (int i = 0; i < n; ++i) f[va[i]] = vb[perm[i]];
    for (auto [u, v] : a.edges())
      if (!b.has_edge(f[u], f[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace widthforge
