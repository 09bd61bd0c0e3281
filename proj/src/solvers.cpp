#include "widthforge/solvers.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>

namespace widthforge {

namespace {

constexpr int kHardSubsetCap = 26;  // 2^26 table entries

// Component subproblem remapped to bit indices 0..n-1 (ascending vertex id).
struct BitGraph {
  int n = 0;
  std::vector<uint32_t> adj;
  std::vector<int> labels;  // bit index -> original vertex id
};

BitGraph to_bitgraph(const Graph& g, const std::vector<int>& comp) {
  BitGraph bg;
  bg.n = static_cast<int>(comp.size());
  bg.labels = comp;
  bg.adj.assign(bg.n, 0);
  std::map<int, int> index;
  for (int i = 0; i < bg.n; ++i) index[comp[i]] = i;
  for (int i = 0; i < bg.n; ++i)
    for (int w : g.neighbors(comp[i])) {
      auto it = index.find(w);
      if (it != index.end()) bg.adj[i] |= 1u << it->second;
    }
  return bg;
}

void check_budget(int size, int budget) {
  if (size > budget) throw BudgetExceeded(size, budget);
  if (size > kHardSubsetCap)
    throw BudgetExceeded(size, kHardSubsetCap);
}

// Component of G[members] containing seed, plus the OR of adjacencies over it.
std::pair<uint32_t, uint32_t> grow_component(const std::vector<uint32_t>& adj, uint32_t members,
                                             uint32_t seed) {
  uint32_t comp = seed;
  uint32_t frontier = seed;
  uint32_t reach = 0;
  while (frontier) {
    for (uint32_t f = frontier; f; f &= f - 1) reach |= adj[std::countr_zero(f)];
    frontier = reach & members & ~comp;
    comp |= frontier;
  }
  return {comp, reach};
}

// Vertices outside S+{v} adjacent to the component of v in G[S+{v}].
int elimination_cost(const BitGraph& bg, uint32_t eliminated, int v) {
  auto [comp, reach] = grow_component(bg.adj, eliminated | (1u << v), 1u << v);
  return std::popcount(reach & ~eliminated & ~(1u << v));
}

// ---- treewidth ----
// T[S] = best achievable max elimination cost when S is already eliminated.

std::vector<int8_t> treewidth_table(const BitGraph& bg) {
  const uint32_t full = (1u << bg.n) - 1;
  std::vector<int8_t> table(std::size_t(1) << bg.n);
  table[full] = -1;
  for (uint32_t set = full; set-- > 0;) {
    // components of G[set] with their outside boundaries
    struct Comp {
      uint32_t mask, boundary;
    };
    Comp comps[32];
    int ncomps = 0;
    uint32_t rem = set;
    while (rem) {
      uint32_t seed = rem & (~rem + 1);
      auto [mask, reach] = grow_component(bg.adj, set, seed);
      comps[ncomps++] = {mask, reach & ~set};
      rem &= ~mask;
    }
    int best = INT_MAX;
    for (uint32_t out = full & ~set; out; out &= out - 1) {
      int v = std::countr_zero(out);
      uint32_t vbit = 1u << v;
      uint32_t boundary = bg.adj[v];
      for (int c = 0; c < ncomps; ++c)
        if (comps[c].mask & bg.adj[v]) boundary |= comps[c].boundary;
      int cost = std::popcount(boundary & ~set & ~vbit);
      int val = std::max<int>(cost, table[set | vbit]);
      best = std::min(best, val);
    }
    table[set] = static_cast<int8_t>(best);
  }
  return table;
}

std::vector<int> treewidth_order(const BitGraph& bg, const std::vector<int8_t>& table) {
  const uint32_t full = (1u << bg.n) - 1;
  std::vector<int> order;
  uint32_t set = 0;
  while (set != full) {
    for (uint32_t out = full & ~set; out; out &= out - 1) {
      int v = std::countr_zero(out);
      int val = std::max<int>(elimination_cost(bg, set, v), table[set | (1u << v)]);
      if (val == table[set]) {
        order.push_back(v);
        set |= 1u << v;
        break;
      }
    }
  }
  return order;
}

// Decomposition for one component from its elimination order: bag(t) holds
// order[t] plus everything still uneliminated that its component reaches.
void append_component_tree(TreeDecomposition& td, const BitGraph& bg,
                           const std::vector<int>& order, std::vector<int>& elim_out) {
  const int base = td.tree.vertex_count();
  std::vector<int> pos(bg.n);
  for (int t = 0; t < bg.n; ++t) pos[order[t]] = t;
  for (int t = 0; t < bg.n; ++t) td.tree.add_vertex(base + t);
  uint32_t eliminated = 0;
  for (int t = 0; t < bg.n; ++t) {
    int v = order[t];
    auto [comp, reach] = grow_component(bg.adj, eliminated | (1u << v), 1u << v);
    uint32_t rest = reach & ~eliminated & ~(1u << v);
    std::vector<int> bag{bg.labels[v]};
    int parent = -1;
    for (uint32_t m = rest; m; m &= m - 1) {
      int w = std::countr_zero(m);
      bag.push_back(bg.labels[w]);
      if (parent == -1 || pos[w] < pos[parent]) parent = w;
    }
    std::sort(bag.begin(), bag.end());
    td.bags[base + t] = std::move(bag);
    if (parent != -1)
      td.tree.add_edge(base + t, base + pos[parent]);
    else if (t + 1 < bg.n)
      td.tree.add_edge(base + t, base + t + 1);  // disconnected remainder
    eliminated |= 1u << v;
    elim_out.push_back(bg.labels[v]);
  }
}

// ---- pathwidth (vertex separation) ----

int boundary_size(const BitGraph& bg, uint32_t prefix) {
  uint32_t nb = 0;
  for (uint32_t m = prefix; m; m &= m - 1) nb |= bg.adj[std::countr_zero(m)];
  return std::popcount(nb & ~prefix);
}

std::vector<int8_t> pathwidth_table(const BitGraph& bg) {
  const uint32_t full = (1u << bg.n) - 1;
  std::vector<int8_t> table(std::size_t(1) << bg.n);
  table[full] = 0;
  for (uint32_t set = full; set-- > 0;) {
    uint32_t reach = 0;
    for (uint32_t m = set; m; m &= m - 1) reach |= bg.adj[std::countr_zero(m)];
    int best = INT_MAX;
    for (uint32_t out = full & ~set; out; out &= out - 1) {
      int v = std::countr_zero(out);
      uint32_t next = set | (1u << v);
      int b = std::popcount((reach | bg.adj[v]) & ~next);
      best = std::min(best, std::max<int>(b, table[next]));
    }
    table[set] = static_cast<int8_t>(best);
  }
  return table;
}

std::vector<int> pathwidth_order(const BitGraph& bg, const std::vector<int8_t>& table) {
  const uint32_t full = (1u << bg.n) - 1;
  std::vector<int> order;
  uint32_t set = 0;
  while (set != full) {
    for (uint32_t out = full & ~set; out; out &= out - 1) {
      int v = std::countr_zero(out);
      uint32_t next = set | (1u << v);
      if (std::max(boundary_size(bg, next), static_cast<int>(table[next])) == table[set]) {
        order.push_back(v);
        set = next;
        break;
      }
    }
  }
  return order;
}

// ---- cutwidth ----

int cut_size(const BitGraph& bg, uint32_t prefix) {
  int cut = 0;
  for (uint32_t m = prefix; m; m &= m - 1) cut += std::popcount(bg.adj[std::countr_zero(m)] & ~prefix);
  return cut;
}

std::vector<int16_t> cutwidth_table(const BitGraph& bg) {
  const uint32_t full = (1u << bg.n) - 1;
  std::vector<int16_t> table(std::size_t(1) << bg.n);
  table[full] = 0;
  for (uint32_t set = full; set-- > 0;) {
    int cut = cut_size(bg, set);
    int best = INT_MAX;
    for (uint32_t out = full & ~set; out; out &= out - 1) {
      int v = std::countr_zero(out);
      int nextcut = cut + std::popcount(bg.adj[v] & ~set) - std::popcount(bg.adj[v] & set);
      int val = std::max<int>(nextcut, table[set | (1u << v)]);
      best = std::min(best, val);
    }
    table[set] = static_cast<int16_t>(best);
  }
  return table;
}

std::vector<int> cutwidth_order(const BitGraph& bg, const std::vector<int16_t>& table) {
  const uint32_t full = (1u << bg.n) - 1;
  std::vector<int> order;
  uint32_t set = 0;
  while (set != full) {
    int cut = cut_size(bg, set);
    for (uint32_t out = full & ~set; out; out &= out - 1) {
      int v = std::countr_zero(out);
      int nextcut = cut + std::popcount(bg.adj[v] & ~set) - std::popcount(bg.adj[v] & set);
      if (std::max<int>(nextcut, table[set | (1u << v)]) == table[set]) {
        order.push_back(v);
        set |= 1u << v;
        break;
      }
    }
  }
  return order;
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, int budget) {
  TreewidthResult res;
  res.width = -1;
  if (g.empty()) {
    res.decomposition.tree.add_vertex(0);
    res.decomposition.bags[0] = {};
    return res;
  }
  auto comps = connected_components(g);
  int prev_last = -1;
  for (const auto& comp : comps) {
    check_budget(static_cast<int>(comp.size()), budget);
    BitGraph bg = to_bitgraph(g, comp);
    auto table = treewidth_table(bg);
    res.width = std::max(res.width, static_cast<int>(table[0]));
    auto order = treewidth_order(bg, table);
    int first_new = res.decomposition.tree.vertex_count();
    append_component_tree(res.decomposition, bg, order, res.elimination_order);
    if (prev_last >= 0) res.decomposition.tree.add_edge(prev_last, first_new);
    prev_last = res.decomposition.tree.vertex_count() - 1;
  }
  return res;
}

PathwidthResult exact_pathwidth(const Graph& g, int budget) {
  PathwidthResult res;
  res.width = -1;
  if (g.empty()) {
    res.decomposition.bags.push_back({});
    return res;
  }
  for (const auto& comp : connected_components(g)) {
    check_budget(static_cast<int>(comp.size()), budget);
    BitGraph bg = to_bitgraph(g, comp);
    auto table = pathwidth_table(bg);
    res.width = std::max(res.width, static_cast<int>(table[0]));
    auto order = pathwidth_order(bg, table);

    std::vector<int> pos(bg.n);
    for (int i = 0; i < bg.n; ++i) pos[order[i]] = i;
    uint32_t prefix = 0;
    for (int i = 0; i < bg.n; ++i) {
      int v = order[i];
      prefix |= 1u << v;
      std::vector<int> bag{bg.labels[v]};
      uint32_t nb = 0;
      for (uint32_t m = prefix; m; m &= m - 1) nb |= bg.adj[std::countr_zero(m)];
      for (uint32_t m = nb & ~prefix; m; m &= m - 1)
        bag.push_back(bg.labels[std::countr_zero(m)]);
      std::sort(bag.begin(), bag.end());
      res.decomposition.bags.push_back(std::move(bag));
      res.ordering.order.push_back(bg.labels[v]);
    }
  }
  return res;
}

CutwidthResult exact_cutwidth(const Graph& g, int budget) {
  CutwidthResult res;
  res.width = g.empty() ? -1 : 0;
  for (const auto& comp : connected_components(g)) {
    check_budget(static_cast<int>(comp.size()), budget);
    BitGraph bg = to_bitgraph(g, comp);
    auto table = cutwidth_table(bg);
    res.width = std::max(res.width, static_cast<int>(table[0]));
    for (int v : cutwidth_order(bg, table)) res.ordering.order.push_back(bg.labels[v]);
  }
  return res;
}

}  // namespace widthforge
