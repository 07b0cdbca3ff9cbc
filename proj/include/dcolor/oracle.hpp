#pragma once

#include <chrono>
#include <optional>

#include "dcolor/gadgets.hpp"
#include "dcolor/instance.hpp"

namespace dcolor {

/// Exhaustive solver for tiny instances (|V| <= 12, C <= 8, Delta <= 6).
/// For arbdefective instances the per-color orientation feasibility is
/// decided by matching monochromatic edges to endpoints within their
/// out-degree budgets. nullopt = proven unsolvable.
std::optional<Solution> brute_force_solve(const Graph& g, const ListInstance& inst);

struct TreeSearchResult {
    bool satisfiable = false;
    RdTree tree;
    std::vector<Color> coloring;  // even-layer nodes when satisfiable, else empty
    long long nodes_explored = 0;
};

/// Exhaustive 2-coloring search on the complete (r,d)-regular tree of height
/// 4t: every even-layer node above the leaves must keep its same-colored
/// distance-2 peers within `defect_cap`, the root is black, and all height-4t
/// nodes are forced to white. Unsatisfiability certifies that a valid
/// defective coloring must repeat the root's color at distance 4t.
TreeSearchResult defective_tree_coloring_search(int r, int d, int t, long long defect_cap,
                                                std::chrono::milliseconds timeout);

/// Default cap r(d-1)-d used by the search.
long long tree_defect_cap(int r, int d);

}  // namespace dcolor
