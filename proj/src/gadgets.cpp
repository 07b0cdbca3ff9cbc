#include "dcolor/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

namespace dcolor {

BipartiteRep BipartiteRep::from_hypergraph(const Hypergraph& h) {
    BipartiteRep b;
    b.left_count = h.node_count;
    b.right_count = static_cast<int>(h.edges.size());
    b.right_adj = h.edges;
    return b;
}

Hypergraph BipartiteRep::to_hypergraph() const {
    return Hypergraph::make(left_count, right_adj);
}

Graph BipartiteRep::to_graph() const {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int e = 0; e < right_count; ++e)
        for (NodeId v : right_adj[e]) edges.emplace_back(v, left_count + e);
    return Graph::from_edges(left_count + right_count, std::move(edges));
}

RdTree RdTree::build(int r, int d, int height) {
    if (r < 2 || d < 2 || height < 0) throw InvalidInput("need r,d >= 2 and height >= 0");
    RdTree t;
    t.r = r;
    t.d = d;
    t.height = height;
    t.parent.push_back(-1);
    t.layer.push_back(0);
    t.children.emplace_back();
    // BFS construction; ids are breadth-first.
    for (int v = 0; v < t.node_count(); ++v) {
        int ly = t.layer[v];
        if (ly == height) continue;
        int deg = (ly % 2 == 0) ? r : d;
        int kids = deg - (v == 0 ? 0 : 1);
        for (int c = 0; c < kids; ++c) {
            t.parent.push_back(v);
            t.layer.push_back(ly + 1);
            t.children.emplace_back();
            t.children[v].push_back(t.node_count() - 1);
        }
    }
    return t;
}

std::vector<int> RdTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (layer[v] == height) out.push_back(v);
    return out;
}

void RdTree::validate() const {
    for (int v = 0; v < node_count(); ++v) {
        int deg = static_cast<int>(children[v].size()) + (parent[v] >= 0 ? 1 : 0);
        if (layer[v] == height) {
            if (!children[v].empty()) throw Error("leaf with children");
            continue;
        }
        int want = (layer[v] % 2 == 0) ? r : d;
        if (deg != want) throw Error("tree degree audit failed");
        for (int c : children[v])
            if (layer[c] != layer[v] + 1) throw Error("tree layer audit failed");
    }
}

int SourceTree::internal_count() const {
    int c = 0;
    for (NodeId v = 0; v < graph.node_count(); ++v)
        if (internal(v)) ++c;
    return c;
}

namespace {

// Seeded bounded draw independent of library distribution internals.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    // bound <= 2^32 here; modulo rejection keeps it unbiased.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

SourceTree SourceTree::random(long long delta, int internal_target, std::uint64_t seed) {
    if (delta < 1 || internal_target < 1) throw InvalidInput("need delta >= 1 and >= 1 internal node");
    std::mt19937_64 rng(seed);

    // Grow the internal skeleton first: each new internal node hangs off an
    // existing one with spare capacity. Remaining ports become boundary leaves.
    std::vector<std::vector<int>> internal_adj(1);
    for (int v = 1; v < internal_target; ++v) {
        std::vector<int> candidates;
        for (int u = 0; u < v; ++u)
            if (static_cast<long long>(internal_adj[u].size()) < delta) candidates.push_back(u);
        if (candidates.empty()) throw InfeasibleParams("delta too small for internal skeleton");
        int u = candidates[draw(rng, candidates.size())];
        internal_adj.emplace_back();
        internal_adj[u].push_back(v);
        internal_adj[v].push_back(u);
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    int next_id = internal_target;
    for (int u = 0; u < internal_target; ++u) {
        for (int w : internal_adj[u])
            if (u < w) edges.emplace_back(u, w);
        long long missing = delta - static_cast<long long>(internal_adj[u].size());
        for (long long i = 0; i < missing; ++i) edges.emplace_back(u, next_id++);
    }

    SourceTree t;
    t.delta = delta;
    t.graph = Graph::from_edges(next_id, std::move(edges));
    // 2-coloring by BFS parity from node 0.
    t.side.assign(next_id, -1);
    std::vector<NodeId> queue{0};
    t.side[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId v = queue[head];
        for (NodeId u : t.graph.neighbors(v))
            if (t.side[u] < 0) {
                t.side[u] = 1 - t.side[v];
                queue.push_back(u);
            }
    }
    return t;
}

ReductionInstance build_reduction(const SourceTree& b, int r, int d, int k) {
    if (r < 3 || d < 2 || k < 1) throw InvalidInput("need r >= 3, d >= 2, k >= 1");
    long long delta = r;
    for (int i = 0; i < 2 * k; ++i) delta *= (d - 1);
    for (int i = 0; i < 2 * k - 1; ++i) delta *= (r - 1);
    if (b.delta != delta)
        throw BadDelta("source tree degree " + std::to_string(b.delta) + " != r(d-1)^{2k}(r-1)^{2k-1} = " +
                       std::to_string(delta));
    for (NodeId v = 0; v < b.graph.node_count(); ++v) {
        int deg = b.graph.degree(v);
        if (deg != 1 && deg != delta)
            throw InvalidInput("source tree node of degree neither 1 nor delta");
        for (NodeId u : b.graph.neighbors(v))
            if (b.side[u] == b.side[v]) throw InvalidInput("source tree sides are not alternating");
    }

    ReductionInstance inst;
    inst.r = r;
    inst.d = d;
    inst.k = k;
    inst.delta = delta;
    inst.source = b;

    RdTree proto = RdTree::build(r, d, 4 * k);
    proto.validate();
    std::vector<int> proto_leaves = proto.leaves();
    if (static_cast<long long>(proto_leaves.size()) != delta)
        throw Error("virtual tree leaf count != delta");

    // Allocate merged-graph ids: one tree copy per internal source node.
    int n_src = b.graph.node_count();
    std::vector<int> tree_base(n_src, -1);
    int next = 0;
    inst.root_of.assign(n_src, -1);
    for (NodeId v = 0; v < n_src; ++v) {
        if (!b.internal(v)) continue;
        tree_base[v] = next;
        inst.root_of[v] = next;
        next += proto.node_count();
    }
    // Leaf ids collapse into per-edge merged nodes.
    std::vector<int> remap(next, -1);
    inst.source_edges.clear();
    for (auto [u, v] : b.graph.edges()) {
        NodeId a = b.side[u] == 0 ? u : v;
        NodeId c = b.side[u] == 0 ? v : u;
        inst.source_edges.emplace_back(a, c);
    }
    std::vector<int> merged_id(inst.source_edges.size(), -1);

    int final_count = next;  // upper bound before compaction; we build edges then compact
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto port_of = [&](NodeId w, NodeId other) {
        const auto& nb = b.graph.neighbors(w);
        return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), other) - nb.begin());
    };
    for (std::size_t e = 0; e < inst.source_edges.size(); ++e) {
        auto [w1, w2] = inst.source_edges[e];
        int leaf1 = b.internal(w1) ? tree_base[w1] + proto_leaves[port_of(w1, w2)] : -1;
        int leaf2 = b.internal(w2) ? tree_base[w2] + proto_leaves[port_of(w2, w1)] : -1;
        int m;
        if (leaf1 >= 0) {
            m = leaf1;
            if (leaf2 >= 0) remap[leaf2] = leaf1;
        } else if (leaf2 >= 0) {
            m = leaf2;
        } else {
            m = final_count++;  // isolated source edge: fresh hyperedge node
        }
        merged_id[e] = m;
    }
    // Tree edges through the remap.
    auto resolve = [&](int id) { return (id < next && remap[id] >= 0) ? remap[id] : id; };
    for (NodeId v = 0; v < n_src; ++v) {
        if (tree_base[v] < 0) continue;
        for (int t = 0; t < proto.node_count(); ++t)
            for (int c : proto.children[t])
                edges.emplace_back(resolve(tree_base[v] + t), resolve(tree_base[v] + c));
    }

    // Compact ids (drop leaves that were remapped away) and classify nodes.
    std::vector<int> compact(final_count, -1);
    int m_count = 0;
    auto touch = [&](int id) {
        if (compact[id] < 0) compact[id] = m_count++;
        return compact[id];
    };
    std::vector<std::pair<NodeId, NodeId>> compact_edges;
    inst.kind.clear();
    inst.layer.clear();
    auto classify = [&](int raw, int id) {
        if (static_cast<int>(inst.kind.size()) <= id) {
            inst.kind.resize(id + 1, ReductionInstance::NodeKind::Dummy);
            inst.layer.resize(id + 1, -1);
        }
        if (raw >= next) {
            inst.kind[id] = ReductionInstance::NodeKind::Merged;
            inst.layer[id] = 4 * k;
            return;
        }
        int within = raw % proto.node_count();
        int ly = proto.layer[within];
        inst.layer[id] = ly;
        if (ly == 4 * k)
            inst.kind[id] = ReductionInstance::NodeKind::Merged;
        else if (ly % 2 == 0)
            inst.kind[id] = ReductionInstance::NodeKind::TreeEven;
        else
            inst.kind[id] = ReductionInstance::NodeKind::TreeOdd;
    };
    for (auto [x, y] : edges) {
        int cx = touch(x), cy = touch(y);
        classify(x, cx);
        classify(y, cy);
        compact_edges.emplace_back(cx, cy);
    }
    for (std::size_t e = 0; e < merged_id.size(); ++e) {
        int cm = touch(merged_id[e]);
        classify(merged_id[e], cm);
        merged_id[e] = cm;
    }
    inst.merged_of_edge.assign(merged_id.begin(), merged_id.end());
    for (NodeId v = 0; v < n_src; ++v)
        if (inst.root_of[v] >= 0) inst.root_of[v] = compact[inst.root_of[v]];

    // Dummy padding to bring every hyperedge-side node to degree r.
    std::vector<int> degree(m_count, 0);
    for (auto [x, y] : compact_edges) {
        ++degree[x];
        ++degree[y];
    }
    int total = m_count;
    for (int v = 0; v < m_count; ++v) {
        bool even_side = inst.kind[v] == ReductionInstance::NodeKind::Merged;
        if (!even_side) continue;
        for (int i = degree[v]; i < r; ++i) {
            compact_edges.emplace_back(v, total);
            inst.kind.push_back(ReductionInstance::NodeKind::Dummy);
            inst.layer.push_back(-1);
            ++total;
        }
    }
    inst.merged = Graph::from_edges(total, std::move(compact_edges));

    // Audits: every node has degree r, d, or 1; classification matches.
    for (NodeId v = 0; v < inst.merged.node_count(); ++v) {
        int deg = inst.merged.degree(v);
        switch (inst.kind[v]) {
            case ReductionInstance::NodeKind::TreeEven:
            case ReductionInstance::NodeKind::Merged:
                if (deg != r) throw Error("hyperedge-side node of degree != r");
                break;
            case ReductionInstance::NodeKind::TreeOdd:
                if (deg != d) throw Error("vertex-side node of degree != d");
                break;
            case ReductionInstance::NodeKind::Dummy:
                if (deg != 1) throw Error("dummy node of degree != 1");
                break;
        }
    }

    // Colorable entities and their distance-2 peers on the hyperedge side.
    inst.dist2_even.assign(inst.merged.node_count(), {});
    inst.fully_interior.assign(inst.merged.node_count(), 0);
    for (NodeId v = 0; v < inst.merged.node_count(); ++v) {
        auto kindv = inst.kind[v];
        if (kindv != ReductionInstance::NodeKind::TreeEven &&
            kindv != ReductionInstance::NodeKind::Merged)
            continue;
        inst.even_nodes.push_back(v);
        std::vector<NodeId>& d2 = inst.dist2_even[v];
        for (NodeId p : inst.merged.neighbors(v))
            for (NodeId w : inst.merged.neighbors(p))
                if (w != v) d2.push_back(w);
        std::sort(d2.begin(), d2.end());
        d2.erase(std::unique(d2.begin(), d2.end()), d2.end());
        long long full = static_cast<long long>(r) * (d - 1);
        inst.fully_interior[v] = static_cast<long long>(d2.size()) == full;
        if (kindv == ReductionInstance::NodeKind::TreeEven && !inst.fully_interior[v])
            throw Error("interior tree node without a full distance-2 neighborhood");
    }
    return inst;
}

std::optional<std::vector<Color>> solve_gadget_coloring(const ReductionInstance& inst,
                                                        std::chrono::milliseconds timeout) {
    const long long cap = inst.defect_cap();
    const auto deadline = std::chrono::steady_clock::now() + timeout;

    std::vector<Color> color(inst.merged.node_count(), kUncolored);
    std::vector<long long> same(inst.merged.node_count(), 0);

    auto place = [&](NodeId v, Color c) -> bool {
        color[v] = c;
        long long own = 0;
        bool ok = true;
        for (NodeId w : inst.dist2_even[v]) {
            if (color[w] != c) continue;
            ++own;
            ++same[w];
            if (inst.fully_interior[w] && same[w] > cap) ok = false;
        }
        same[v] = own;
        if (inst.fully_interior[v] && own > cap) ok = false;
        return ok;
    };
    auto unplace = [&](NodeId v) {
        for (NodeId w : inst.dist2_even[v])
            if (color[w] == color[v]) --same[w];
        same[v] = 0;
        color[v] = kUncolored;
    };

    // Forced roots first (failure here means the instance is infeasible).
    std::vector<char> forced(inst.merged.node_count(), 0);
    for (NodeId v = 0; v < inst.source.graph.node_count(); ++v) {
        NodeId root = inst.root_of[v];
        if (root < 0) continue;
        forced[root] = 1;
        if (!place(root, inst.source.side[v])) return std::nullopt;
    }

    std::vector<NodeId> free_nodes;
    for (NodeId v : inst.even_nodes)
        if (!forced[v]) free_nodes.push_back(v);

    long long steps = 0;
    std::function<bool(std::size_t)> dfs = [&](std::size_t at) -> bool {
        if (at == free_nodes.size()) return true;
        if (((++steps) & 4095) == 0 && std::chrono::steady_clock::now() > deadline)
            throw SearchTimeout("gadget coloring search timed out");
        NodeId v = free_nodes[at];
        for (Color c : {Color{0}, Color{1}}) {
            if (place(v, c)) {
                if (dfs(at + 1)) return true;
            }
            unplace(v);
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    return color;
}

std::vector<std::pair<NodeId, NodeId>> extract_sinkless(const ReductionInstance& inst,
                                                        const std::vector<Color>& merged_colors) {
    std::vector<std::pair<NodeId, NodeId>> orient;
    orient.reserve(inst.source_edges.size());
    for (std::size_t e = 0; e < inst.source_edges.size(); ++e) {
        auto [w1, w2] = inst.source_edges[e];  // w1 on side 0, w2 on side 1
        bool i1 = inst.source.internal(w1);
        bool i2 = inst.source.internal(w2);
        if (i1 && i2) {
            Color c = merged_colors[inst.merged_of_edge[e]];
            if (c == 0)
                orient.emplace_back(w1, w2);
            else
                orient.emplace_back(w2, w1);
        } else if (i1) {
            orient.emplace_back(w1, w2);  // toward the boundary node
        } else {
            orient.emplace_back(w2, w1);
        }
    }
    return orient;
}

std::vector<NodeId> verify_sinkless(const SourceTree& b,
                                    const std::vector<std::pair<NodeId, NodeId>>& orientation) {
    std::vector<long long> out_deg(b.graph.node_count(), 0);
    for (auto [u, v] : orientation) {
        if (!b.graph.has_edge(u, v)) throw InvalidInput("orientation pair is not a source edge");
        ++out_deg[u];
    }
    std::vector<NodeId> sinks;
    for (NodeId v = 0; v < b.graph.node_count(); ++v)
        if (b.internal(v) && out_deg[v] == 0) sinks.push_back(v);
    return sinks;
}

}  // namespace dcolor
