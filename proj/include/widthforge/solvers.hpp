#pragma once

#include <stdexcept>
#include <string>

#include "widthforge/decomposition.hpp"
#include "widthforge/graph.hpp"

namespace widthforge {

inline constexpr int kDefaultTreewidthBudget = 24;
inline constexpr int kDefaultPathwidthBudget = 24;
inline constexpr int kDefaultCutwidthBudget = 20;

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(int component, int budget)
      : std::runtime_error("component with " + std::to_string(component) +
                           " vertices exceeds solver budget " + std::to_string(budget)),
        component_size(component),
        budget(budget) {}
  int component_size;
  int budget;
};

struct TreewidthResult {
  int width;
  TreeDecomposition decomposition;
  std::vector<int> elimination_order;
};

struct PathwidthResult {
  int width;
  PathDecomposition decomposition;
  LinearOrdering ordering;
};

struct CutwidthResult {
  int width;
  LinearOrdering ordering;
};

// Exact solvers via dynamic programming over vertex subsets, one connected
// component at a time. The budget bounds the largest component; widths of an
// empty graph are -1 by the |bag|-1 convention. Certificates are optimal and
// deterministic: ties break toward the lexicographically smallest ordering
// within each component.
TreewidthResult exact_treewidth(const Graph& g, int budget = kDefaultTreewidthBudget);
PathwidthResult exact_pathwidth(const Graph& g, int budget = kDefaultPathwidthBudget);
CutwidthResult exact_cutwidth(const Graph& g, int budget = kDefaultCutwidthBudget);

}  // namespace widthforge
