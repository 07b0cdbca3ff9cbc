#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dcolor/generators.hpp"
#include "dcolor/graph.hpp"

using namespace dcolor;

namespace {

// Test-side oracle: independence number of G[N(v)] by all-subsets enumeration.
int naive_theta(const Graph& g) {
    int best = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto& nb = g.neighbors(v);
        int k = static_cast<int>(nb.size());
        REQUIRE(k <= 20);
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            bool independent = true;
            for (int i = 0; i < k && independent; ++i)
                for (int j = i + 1; j < k && independent; ++j)
                    if ((mask >> i & 1) && (mask >> j & 1) && g.has_edge(nb[i], nb[j]))
                        independent = false;
            if (independent) best = std::max(best, __builtin_popcount(mask));
        }
    }
    return best;
}

Graph complete_graph(int n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, std::move(e));
}

}  // namespace

TEST_CASE("graph construction invariants") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 2}, {2, 3}});
    CHECK(g.edge_count() == 3);  // duplicate collapsed
    CHECK(g.max_degree() == 2);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 3));
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), InvalidInput);
}

TEST_CASE("line graph of a triangle of 2-edges is K3") {
    Hypergraph h = Hypergraph::make(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph lg = line_graph(h);
    CHECK(lg.node_count() == 3);
    CHECK(lg.edge_count() == 3);
    CHECK(lg.max_degree() == 2);
}

TEST_CASE("line graph of a single hyperedge is an isolated node") {
    Hypergraph h = Hypergraph::make(5, {{0, 1, 2}});
    Graph lg = line_graph(h);
    CHECK(lg.node_count() == 1);
    CHECK(lg.edge_count() == 0);
}

TEST_CASE("line graph degree bound r(d-1) on a random 3-uniform 3-regular hypergraph") {
    Hypergraph h = gen_hypergraph(12, 3, 3, 42);
    CHECK(h.rank == 3);
    CHECK(h.max_degree == 3);
    Graph lg = line_graph(h);
    CHECK(lg.max_degree() <= 3 * (3 - 1));
    // Node degree equals the count of intersecting partner hyperedges.
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        int expect = 0;
        for (std::size_t f = 0; f < h.edges.size(); ++f) {
            if (e == f) continue;
            bool meets = false;
            for (NodeId x : h.edges[e])
                for (NodeId y : h.edges[f])
                    if (x == y) meets = true;
            if (meets) ++expect;
        }
        CHECK(lg.degree(static_cast<NodeId>(e)) == expect);
    }
}

TEST_CASE("twin hyperedges become adjacent twin line-graph nodes") {
    Hypergraph h = Hypergraph::make(3, {{0, 1, 2}, {0, 1, 2}});
    Graph lg = line_graph(h);
    CHECK(lg.node_count() == 2);
    CHECK(lg.has_edge(0, 1));
}

TEST_CASE("neighborhood independence on small named graphs") {
    CHECK(neighborhood_independence(complete_graph(4)).theta == 1);

    Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    auto ni = neighborhood_independence(star);
    CHECK(ni.theta == 5);
    CHECK(ni.witness_node == 0);
    CHECK(ni.witness_set.size() == 5);
    // witness is independent and inside N(witness_node)
    for (std::size_t i = 0; i < ni.witness_set.size(); ++i) {
        CHECK(star.has_edge(ni.witness_node, ni.witness_set[i]));
        for (std::size_t j = i + 1; j < ni.witness_set.size(); ++j)
            CHECK(!star.has_edge(ni.witness_set[i], ni.witness_set[j]));
    }

    Graph edgeless = Graph::from_edges(3, {});
    CHECK(neighborhood_independence(edgeless).theta == 0);
}

TEST_CASE("neighborhood independence matches naive enumeration on random graphs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = gen_random_graph(14, 24, 8, seed);
        CHECK(neighborhood_independence(g).theta == naive_theta(g));
    }
}

TEST_CASE("line graphs of rank-r hypergraphs have theta <= r") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int r : {2, 3, 4}) {
        for (int trial = 0; trial < 200; ++trial) {
            int d = 2 + static_cast<int>(rng() % 3);
            int n = r * (3 + static_cast<int>(rng() % 4));
            if ((n * d) % r != 0) continue;
            Hypergraph h = gen_hypergraph(n, r, d, rng());
            Graph lg = line_graph(h);
            CHECK(neighborhood_independence(lg).theta <= r);
            ++checked;
        }
    }
    CHECK(checked >= 500);
}

TEST_CASE("degree-too-large guard") {
    Graph star = Graph::from_edges(35, [] {
        std::vector<std::pair<NodeId, NodeId>> e;
        for (int i = 1; i < 35; ++i) e.emplace_back(0, i);
        return e;
    }());
    CHECK_THROWS_AS(neighborhood_independence(star), DegreeTooLarge);
}

TEST_CASE("check_proper") {
    Graph k3 = complete_graph(3);
    CHECK(check_proper(k3, {1, 2, 3}).empty());
    auto bad = check_proper(k3, {1, 1, 2});
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].u == 0);
    CHECK(bad[0].v == 1);

    Graph path = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(check_proper(path, {1, 2, 1, 2, 1}).empty());

    CHECK_THROWS_AS(check_proper(k3, {1, 2, kUncolored}), MissingColor);
}

TEST_CASE("induced subgraph keeps degrees consistent") {
    Graph g = gen_random_graph(20, 40, 10, 3);
    std::vector<NodeId> nodes{0, 2, 4, 6, 8, 10, 12};
    Subgraph sub = induce(g, nodes);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        int expect = 0;
        for (NodeId u : nodes)
            if (u != nodes[i] && g.has_edge(nodes[i], u)) ++expect;
        CHECK(sub.graph.degree(static_cast<NodeId>(i)) == expect);
    }
}
