#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "dcolor/graph.hpp"

namespace dcolor {

/// Incidence bipartite view of a hypergraph: left nodes are the hypergraph's
/// vertices, right nodes its hyperedges. Lossless in both directions.
struct BipartiteRep {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::vector<NodeId>> right_adj;  // per hyperedge: sorted member vertices

    static BipartiteRep from_hypergraph(const Hypergraph& h);
    Hypergraph to_hypergraph() const;
    /// Combined graph: vertices 0..left-1, hyperedges left..left+right-1.
    Graph to_graph() const;
};

/// Rooted tree whose non-leaves have degree r on even layers and d on odd
/// layers.
struct RdTree {
    int r = 0, d = 0, height = 0;
    std::vector<int> parent;  // -1 at the root
    std::vector<int> layer;
    std::vector<std::vector<int>> children;

    int node_count() const { return static_cast<int>(parent.size()); }
    std::vector<int> leaves() const;

    static RdTree build(int r, int d, int height);
    void validate() const;
};

/// Finite 2-colored source tree: internal nodes of degree delta, boundary
/// nodes of degree 1. Port j of a node is its j-th neighbor in adjacency
/// order.
struct SourceTree {
    Graph graph;
    std::vector<int> side;      // 0 or 1, alternating across edges
    long long delta = 0;

    bool internal(NodeId v) const { return graph.degree(v) == delta; }
    int internal_count() const;

    /// Random tree with exactly `internal_target` internal nodes, every other
    /// node a boundary leaf. Deterministic under seed.
    static SourceTree random(long long delta, int internal_target, std::uint64_t seed);
};

/// The merged virtual-tree gadget: per internal source node a complete
/// (r,d)-regular tree of height 4k whose leaves are identified across source
/// edges, padded with dummy nodes up to degree r.
struct ReductionInstance {
    enum class NodeKind : std::uint8_t { TreeEven, TreeOdd, Merged, Dummy };

    int r = 0, d = 0, k = 0;
    long long delta = 0;
    SourceTree source;

    Graph merged;
    std::vector<NodeKind> kind;
    std::vector<int> layer;                     // within-tree layer, -1 for dummies
    std::vector<NodeId> root_of;                // per source node, -1 for boundary nodes
    std::vector<std::pair<NodeId, NodeId>> source_edges;  // (side-0 endpoint, side-1 endpoint)
    std::vector<NodeId> merged_of_edge;         // per source edge

    std::vector<NodeId> even_nodes;             // colorable entities in assignment order
    std::vector<std::vector<NodeId>> dist2_even;  // per merged-graph node (even only)
    std::vector<char> fully_interior;

    long long defect_cap() const { return static_cast<long long>(r) * (d - 1) - d; }
};

ReductionInstance build_reduction(const SourceTree& b, int r, int d, int k);

/// Backtracking search for a 2-coloring of the gadget's hyperedge-side nodes
/// where every fully-interior node has at most `defect_cap` same-colored
/// distance-2 peers and internal roots are forced to their source side's
/// color (side 0 -> 0, side 1 -> 1). Returns nullopt if none exists.
std::optional<std::vector<Color>> solve_gadget_coloring(const ReductionInstance& inst,
                                                        std::chrono::milliseconds timeout);

/// Orientation of the source tree's edges: for internal-internal edges the
/// merged node's color decides (0 = toward side 1), edges with a boundary
/// endpoint point at the boundary node.
std::vector<std::pair<NodeId, NodeId>> extract_sinkless(const ReductionInstance& inst,
                                                        const std::vector<Color>& merged_colors);

/// Degree-delta nodes with no outgoing edge.
std::vector<NodeId> verify_sinkless(const SourceTree& b,
                                    const std::vector<std::pair<NodeId, NodeId>>& orientation);

}  // namespace dcolor
