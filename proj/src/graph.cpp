#include "dcolor/graph.hpp"

#include <algorithm>
#include <cstdint>

namespace dcolor {

Graph Graph::from_edges(int n, std::vector<std::pair<NodeId, NodeId>> edges) {
    if (n < 0) throw InvalidInput("negative node count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));
        g.edge_count_ += static_cast<long long>(nb.size());
    }
    g.edge_count_ /= 2;
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Subgraph induce(const Graph& g, const std::vector<NodeId>& nodes) {
    std::vector<int> local(g.node_count(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        NodeId v = nodes[i];
        if (v < 0 || v >= g.node_count()) throw InvalidInput("subset node out of range");
        if (local[v] != -1) throw InvalidInput("duplicate node in subset");
        local[v] = static_cast<int>(i);
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (NodeId w : g.neighbors(nodes[i]))
            if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
    return Subgraph{Graph::from_edges(static_cast<int>(nodes.size()), std::move(edges)), nodes};
}

Hypergraph Hypergraph::make(int n, std::vector<std::vector<NodeId>> edges) {
    if (n < 0) throw InvalidInput("negative node count");
    Hypergraph h;
    h.node_count = n;
    std::vector<int> deg(n, 0);
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidInput("hyperedge with repeated node");
        if (e.empty()) throw InvalidInput("empty hyperedge");
        for (NodeId v : e) {
            if (v < 0 || v >= n) throw InvalidInput("hyperedge node out of range");
            ++deg[v];
        }
        h.rank = std::max(h.rank, static_cast<int>(e.size()));
    }
    for (int d : deg) h.max_degree = std::max(h.max_degree, d);
    h.edges = std::move(edges);
    return h;
}

Graph line_graph(const Hypergraph& h) {
    int m = static_cast<int>(h.edges.size());
    // Two hyperedges are adjacent iff they are co-incident at some node.
    std::vector<std::vector<int>> incident(h.node_count);
    for (int e = 0; e < m; ++e)
        for (NodeId v : h.edges[e]) incident[v].push_back(e);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& inc : incident)
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                edges.emplace_back(inc[i], inc[j]);
    return Graph::from_edges(m, std::move(edges));
}

namespace {

// Max independent set on <=32 vertices given adjacency bitmasks.
int mis_recurse(std::uint32_t candidates, const std::vector<std::uint32_t>& adj,
                std::uint32_t chosen, int best_so_far, std::uint32_t* best_set) {
    if (candidates == 0) {
        int size = __builtin_popcount(chosen);
        if (size > best_so_far && best_set) *best_set = chosen;
        return size;
    }
    int upper = __builtin_popcount(chosen) + __builtin_popcount(candidates);
    if (upper <= best_so_far) return best_so_far;
    int v = __builtin_ctz(candidates);
    std::uint32_t bit = 1u << v;
    int with_v = mis_recurse(candidates & ~(adj[v] | bit), adj, chosen | bit, best_so_far, best_set);
    int best = std::max(best_so_far, with_v);
    int without_v = mis_recurse(candidates & ~bit, adj, chosen, best, best_set);
    return std::max(best, without_v);
}

}  // namespace

NeighborhoodIndependence neighborhood_independence(const Graph& g) {
    if (g.max_degree() > 32)
        throw DegreeTooLarge("neighborhood_independence requires max degree <= 32, got " +
                             std::to_string(g.max_degree()));
    NeighborhoodIndependence result;
    if (g.node_count() > 0) result.witness_node = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto& nb = g.neighbors(v);
        int k = static_cast<int>(nb.size());
        if (k <= result.theta) continue;  // cannot beat current best
        std::vector<std::uint32_t> adj(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(nb[i], nb[j])) {
                    adj[i] |= 1u << j;
                    adj[j] |= 1u << i;
                }
        std::uint32_t all = (k == 32) ? ~0u : ((1u << k) - 1);
        std::uint32_t best_set = 0;
        int theta_v = mis_recurse(all, adj, 0, result.theta, &best_set);
        if (theta_v > result.theta) {
            result.theta = theta_v;
            result.witness_node = v;
            result.witness_set.clear();
            for (int i = 0; i < k; ++i)
                if (best_set & (1u << i)) result.witness_set.push_back(nb[i]);
        }
    }
    return result;
}

std::vector<EdgeViolation> check_proper(const Graph& g, const std::vector<Color>& coloring) {
    if (static_cast<int>(coloring.size()) != g.node_count())
        throw MissingColor("coloring size does not match node count");
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (coloring[v] == kUncolored)
            throw MissingColor("node " + std::to_string(v) + " is uncolored");
    std::vector<EdgeViolation> bad;
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v && coloring[u] == coloring[v]) bad.push_back({u, v});
    return bad;
}

}  // namespace dcolor
