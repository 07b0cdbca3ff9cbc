#include "dcolor/oracle.hpp"

#include <algorithm>
#include <functional>

namespace dcolor {

namespace {

// Orientation feasibility for one color class: each monochromatic edge must
// charge one endpoint, node v absorbs at most cap[v] charges. Solved as a
// tiny augmenting-path matching; assignment[i] = charged endpoint of edge i.
bool assign_edges(const std::vector<std::pair<NodeId, NodeId>>& edges,
                  const std::vector<long long>& cap, std::vector<int>* assignment) {
    int m = static_cast<int>(edges.size());
    std::vector<int> owner(m, -1);  // 0 = first endpoint, 1 = second
    std::vector<long long> used(cap.size(), 0);

    // Augmenting search: free capacity at an endpoint, or steal an edge
    // currently charged there and re-seat it on its other endpoint.
    std::function<bool(NodeId, std::vector<char>&)> free_up = [&](NodeId v, std::vector<char>& seen) {
        if (used[v] < cap[v]) return true;
        for (int e = 0; e < m; ++e) {
            NodeId charged = owner[e] == 0 ? edges[e].first : edges[e].second;
            if (owner[e] < 0 || charged != v) continue;
            NodeId other = owner[e] == 0 ? edges[e].second : edges[e].first;
            if (seen[other]) continue;
            seen[other] = 1;
            if (free_up(other, seen)) {
                owner[e] ^= 1;
                --used[v];
                ++used[other];
                return true;
            }
        }
        return false;
    };

    for (int e = 0; e < m; ++e) {
        auto [a, b] = edges[e];
        std::vector<char> seen(cap.size(), 0);
        seen[a] = 1;
        if (free_up(a, seen)) {
            owner[e] = 0;
            ++used[a];
            continue;
        }
        std::fill(seen.begin(), seen.end(), 0);
        seen[b] = 1;
        if (free_up(b, seen)) {
            owner[e] = 1;
            ++used[b];
            continue;
        }
        return false;
    }
    if (assignment) *assignment = owner;
    return true;
}

struct BruteState {
    const Graph* g;
    const ListInstance* inst;
    std::vector<Color> colors;
    bool arb;
};

// Partial feasibility: monochromatic edges among colored nodes must already
// admit an orientation (caps are fixed once a node is colored), so failure
// here prunes the whole subtree.
bool partial_ok(const BruteState& s, std::vector<int>* assignment_out,
                std::vector<std::pair<NodeId, NodeId>>* edges_out) {
    const Graph& g = *s.g;
    if (!s.arb) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (s.colors[v] == kUncolored) continue;
            long long same = 0;
            for (NodeId u : g.neighbors(v))
                if (s.colors[u] == s.colors[v]) ++same;
            if (same > *s.inst->defect_of(v, s.colors[v])) return false;
        }
        return true;
    }
    std::vector<std::pair<NodeId, NodeId>> mono;
    std::vector<long long> cap(g.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (s.colors[v] != kUncolored) cap[v] = *s.inst->defect_of(v, s.colors[v]);
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v && s.colors[u] != kUncolored && s.colors[u] == s.colors[v])
                mono.emplace_back(u, v);
    bool ok = assign_edges(mono, cap, assignment_out);
    if (ok && edges_out) *edges_out = std::move(mono);
    return ok;
}

bool brute_dfs(BruteState& s, NodeId v) {
    const Graph& g = *s.g;
    if (v == g.node_count()) return partial_ok(s, nullptr, nullptr);
    if (s.inst->lists[v].empty()) {
        if (g.degree(v) > 0) return false;  // non-isolated node with nothing to pick
        s.colors[v] = kUncolored;
        return brute_dfs(s, v + 1);
    }
    for (const auto& cd : s.inst->lists[v]) {
        s.colors[v] = cd.color;
        if (partial_ok(s, nullptr, nullptr) && brute_dfs(s, v + 1)) return true;
    }
    s.colors[v] = kUncolored;
    return false;
}

}  // namespace

std::optional<Solution> brute_force_solve(const Graph& g, const ListInstance& inst) {
    if (g.node_count() > 12) throw SizeLimit("brute force limited to 12 nodes");
    if (inst.color_space > 8) throw SizeLimit("brute force limited to color space 8");
    if (g.max_degree() > 6) throw SizeLimit("brute force limited to max degree 6");
    inst.validate(g);

    BruteState s{&g, &inst, std::vector<Color>(g.node_count(), kUncolored),
                 inst.mode == Mode::Arbdefective};
    if (!brute_dfs(s, 0)) return std::nullopt;

    Solution sol;
    sol.colors = s.colors;
    if (s.arb) {
        std::vector<int> assignment;
        std::vector<std::pair<NodeId, NodeId>> mono;
        if (!partial_ok(s, &assignment, &mono))
            throw Error("accepted coloring lost orientation feasibility");
        for (std::size_t e = 0; e < mono.size(); ++e) {
            auto [a, b] = mono[e];
            if (assignment[e] == 0)
                sol.orientation.emplace_back(a, b);  // a is charged: edge goes out of a
            else
                sol.orientation.emplace_back(b, a);
        }
    }
    return sol;
}

long long tree_defect_cap(int r, int d) { return static_cast<long long>(r) * (d - 1) - d; }

TreeSearchResult defective_tree_coloring_search(int r, int d, int t, long long defect_cap,
                                                std::chrono::milliseconds timeout) {
    if (r < 3 || d < 3) throw InvalidInput("search requires r, d >= 3");
    if (t != 1) throw SizeLimit("search supports t = 1 only");

    TreeSearchResult result;
    result.tree = RdTree::build(r, d, 4 * t);
    result.tree.validate();
    const RdTree& tree = result.tree;
    int n = tree.node_count();

    // Distance-2 peers among even-layer nodes; interior layers must have
    // exactly r(d-1) of them.
    std::vector<std::vector<int>> dist2(n);
    std::vector<char> is_even(n, 0), constrained(n, 0);
    for (int v = 0; v < n; ++v) {
        if (tree.layer[v] % 2 != 0) continue;
        is_even[v] = 1;
        constrained[v] = tree.layer[v] <= 4 * t - 2;
        auto push_through = [&](int mid) {
            if (mid < 0) return;
            if (tree.parent[mid] >= 0 && tree.parent[mid] != v) dist2[v].push_back(tree.parent[mid]);
            for (int c : tree.children[mid])
                if (c != v) dist2[v].push_back(c);
        };
        push_through(tree.parent[v]);
        for (int c : tree.children[v]) push_through(c);
        long long full = static_cast<long long>(r) * (d - 1);
        if (constrained[v] && static_cast<long long>(dist2[v].size()) != full)
            throw Error("interior distance-2 count != r(d-1)");
    }

    std::vector<Color> color(n, kUncolored);
    std::vector<long long> same(n, 0);
    const auto deadline = std::chrono::steady_clock::now() + timeout;

    auto place = [&](int v, Color c) -> bool {
        color[v] = c;
        long long own = 0;
        bool ok = true;
        for (int w : dist2[v]) {
            if (color[w] != c) continue;
            ++own;
            ++same[w];
            if (constrained[w] && same[w] > defect_cap) ok = false;
        }
        same[v] = own;
        if (constrained[v] && own > defect_cap) ok = false;
        return ok;
    };
    auto unplace = [&](int v) {
        for (int w : dist2[v])
            if (color[w] == color[v]) --same[w];
        same[v] = 0;
        color[v] = kUncolored;
    };

    // Root black; every height-4t node forced to the opposite color. A
    // forced placement that already violates a cap means Unsat outright.
    bool forced_ok = place(0, 0);
    for (int v = 0; v < n && forced_ok; ++v)
        if (tree.layer[v] == 4 * t) forced_ok = place(v, 1);

    std::vector<int> free_nodes;
    for (int v = 0; v < n; ++v)
        if (is_even[v] && tree.layer[v] != 0 && tree.layer[v] != 4 * t) free_nodes.push_back(v);
    std::sort(free_nodes.begin(), free_nodes.end());  // breadth-first order by construction

    // Symmetry pruning (t = 1: free nodes are exactly the layer-2 nodes):
    // within one layer-1 parent, colors must be nondecreasing; whole sibling
    // tuples under the root must be lexicographically nondecreasing.
    auto symmetric_ok = [&](std::size_t at) {
        int v = free_nodes[at];
        int par = tree.parent[v];
        const auto& sibs = tree.children[par];
        auto pos = std::find(sibs.begin(), sibs.end(), v) - sibs.begin();
        if (pos > 0 && color[sibs[pos - 1]] > color[v]) return false;
        if (static_cast<std::size_t>(pos) + 1 == sibs.size()) {
            const auto& uncles = tree.children[tree.parent[par]];
            auto ppos = std::find(uncles.begin(), uncles.end(), par) - uncles.begin();
            if (ppos > 0) {
                const auto& prev = tree.children[uncles[ppos - 1]];
                if (std::lexicographical_compare(
                        sibs.begin(), sibs.end(), prev.begin(), prev.end(),
                        [&](int a, int b) { return color[a] < color[b]; }))
                    return false;
            }
        }
        return true;
    };

    std::function<bool(std::size_t)> dfs = [&](std::size_t at) -> bool {
        if (at == free_nodes.size()) return true;
        if (((++result.nodes_explored) & 4095) == 0 && std::chrono::steady_clock::now() > deadline)
            throw SearchTimeout("tree coloring search timed out");
        int v = free_nodes[at];
        for (Color c : {Color{0}, Color{1}}) {
            if (place(v, c) && symmetric_ok(at)) {
                if (dfs(at + 1)) return true;
            }
            unplace(v);
        }
        return false;
    };

    result.satisfiable = forced_ok && dfs(0);
    if (result.satisfiable) result.coloring = color;
    return result;
}

}  // namespace dcolor
