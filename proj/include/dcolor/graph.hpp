#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcolor/errors.hpp"

namespace dcolor {

using NodeId = int;
using Color = long long;

constexpr Color kUncolored = -1;

/// Simple undirected graph: symmetric adjacency, no self-loops, no parallel
/// edges. Immutable after construction, safe to share across threads.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, std::vector<std::pair<NodeId, NodeId>> edges);

    int node_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }
    int max_degree() const { return max_degree_; }
    int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
    bool has_edge(NodeId u, NodeId v) const;

    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    std::vector<std::vector<NodeId>> adj_;
    int max_degree_ = 0;
    long long edge_count_ = 0;
};

/// Induced subgraph together with the map back to the parent graph's ids.
struct Subgraph {
    Graph graph;
    std::vector<NodeId> to_parent;  // local index -> parent node id
};

Subgraph induce(const Graph& g, const std::vector<NodeId>& nodes);

/// Hypergraph with hyperedges as sorted node sets. Hyperedges of identical
/// node sets are permitted; nodes within a hyperedge must be distinct.
struct Hypergraph {
    int node_count = 0;
    std::vector<std::vector<NodeId>> edges;
    int rank = 0;        // max hyperedge size
    int max_degree = 0;  // max number of hyperedges per node

    static Hypergraph make(int n, std::vector<std::vector<NodeId>> edges);
};

/// One node per hyperedge (numbered by hyperedge index); two nodes adjacent
/// iff their hyperedges share at least one node.
Graph line_graph(const Hypergraph& h);

struct NeighborhoodIndependence {
    int theta = 0;
    NodeId witness_node = -1;           // -1 when theta == 0 and graph empty
    std::vector<NodeId> witness_set;    // independent set inside N(witness_node)
};

/// Exact maximum independent-set size over all one-hop neighborhoods.
/// Requires max_degree <= 32 (per-neighborhood bitmask search).
NeighborhoodIndependence neighborhood_independence(const Graph& g);

struct EdgeViolation {
    NodeId u = -1;
    NodeId v = -1;
};

/// Every monochromatic edge of a total coloring; empty iff proper.
std::vector<EdgeViolation> check_proper(const Graph& g, const std::vector<Color>& coloring);

}  // namespace dcolor
