#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>

#include "dcolor/generators.hpp"
#include "dcolor/primitives.hpp"
#include "dcolor/sim.hpp"

using namespace dcolor;

namespace {

// Collects the k-hop ball: each round every node floods everything it knows.
// Before the first message a node knows only its own id; incident edges are
// inferred from the sender ids of arriving messages.
struct GatherProgram {
    struct Knowledge {
        std::set<long long> ids;
        std::set<std::pair<long long, long long>> edges;
    };
    struct State {
        int rounds_left;
        Knowledge known;
    };
    struct Msg {
        long long sender;
        Knowledge known;
    };
    using Output = Knowledge;

    const Graph& g;
    const std::vector<long long>& ids;
    int k;

    State init(int v) const {
        State s;
        s.rounds_left = k;
        s.known.ids.insert(ids[v]);
        return s;
    }
    bool done(const State& s, int) const { return s.rounds_left == 0; }
    std::optional<Msg> message(const State& s, int v) const { return Msg{ids[v], s.known}; }
    void update(State& s, int v, const std::vector<const Msg*>& inbox) {
        if (s.rounds_left == 0) return;
        for (const Msg* m : inbox) {
            if (!m) continue;
            s.known.ids.insert(m->known.ids.begin(), m->known.ids.end());
            s.known.edges.insert(m->known.edges.begin(), m->known.edges.end());
            s.known.ids.insert(m->sender);
            s.known.edges.insert(std::minmax(ids[v], m->sender));
        }
        --s.rounds_left;
    }
    Output output(const State& s, int) const { return s.known; }
};

struct NoopProgram {
    struct State {};
    using Msg = int;
    using Output = int;
    State init(int) const { return {}; }
    bool done(const State&, int) const { return true; }
    std::optional<Msg> message(const State&, int) const { return std::nullopt; }
    void update(State&, int, const std::vector<const Msg*>&) {}
    Output output(const State&, int) const { return 0; }
};

struct CountdownProgram {
    struct State { int left; };
    using Msg = int;
    using Output = int;
    int start;
    State init(int) const { return {start}; }
    bool done(const State& s, int) const { return s.left == 0; }
    std::optional<Msg> message(const State&, int) const { return 1; }
    void update(State& s, int, const std::vector<const Msg*>&) {
        if (s.left > 0) --s.left;
    }
    Output output(const State&, int) const { return 0; }
};

Graph cycle(int n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(e));
}

// True k-ball of v: ids and induced edges within distance k.
GatherProgram::Knowledge true_ball(const Graph& g, const std::vector<long long>& ids, NodeId v,
                                   int k) {
    std::vector<int> dist(g.node_count(), -1);
    std::vector<NodeId> queue{v};
    dist[v] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        NodeId u = queue[h];
        if (dist[u] == k) continue;
        for (NodeId w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    GatherProgram::Knowledge ball;
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (dist[u] >= 0) ball.ids.insert(ids[u]);
    // k rounds of flooding reveal exactly the edges incident to a node at
    // distance <= k-1 (edges between two distance-k nodes stay unseen).
    for (auto [a, b] : g.edges()) {
        int da = dist[a] < 0 ? k + 1 : dist[a];
        int db = dist[b] < 0 ? k + 1 : dist[b];
        if (std::min(da, db) <= k - 1) ball.edges.insert(std::minmax(ids[a], ids[b]));
    }
    return ball;
}

}  // namespace

TEST_CASE("single isolated node terminates in zero rounds") {
    Graph g = Graph::from_edges(1, {});
    NoopProgram prog;
    RoundLog log;
    auto out = run_program(g, prog, log, "noop", 100);
    CHECK(out.size() == 1);
    CHECK(log.total_rounds == 0);
}

TEST_CASE("gather-k runs exactly k rounds and learns the true k-ball") {
    Graph g = gen_random_graph(24, 40, 6, 5);
    SimConfig cfg = SimConfig::for_graph(g);
    for (int k : {1, 2, 3}) {
        GatherProgram prog{g, cfg.ids, k};
        RoundLog log;
        auto out = run_program(g, prog, log, "gather", 100);
        CHECK(log.total_rounds == k);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            auto want = true_ball(g, cfg.ids, v, k);
            CHECK(out[v].ids == want.ids);
            CHECK(out[v].edges == want.edges);
        }
    }
}

TEST_CASE("determinism: identical runs produce identical outputs and logs") {
    Graph g = cycle(64);
    SimConfig cfg = SimConfig::for_graph(g);
    RoundLog log1, log2;
    auto c1 = linial_coloring(g, cfg, log1);
    auto c2 = linial_coloring(g, cfg, log2);
    CHECK(c1.colors == c2.colors);
    CHECK(c1.color_count == c2.color_count);
    CHECK(log1.total_rounds == log2.total_rounds);
    CHECK(log1.rounds_by_label == log2.rounds_by_label);
}

TEST_CASE("locality: output depends only on the T-hop ball") {
    // Rerun the reduction on the extracted ball with the same global config
    // and compare the center's output.
    Graph g = cycle(101);
    SimConfig cfg = SimConfig::for_graph(g);
    RoundLog log;
    auto full = linial_coloring(g, cfg, log);
    long long rounds = log.total_rounds;
    REQUIRE(rounds > 0);

    NodeId center = 37;
    std::vector<NodeId> ball;
    for (long long off = -rounds; off <= rounds; ++off)
        ball.push_back(static_cast<NodeId>((center + off + 101) % 101));
    std::sort(ball.begin(), ball.end());
    Subgraph sub = induce(g, ball);
    SimConfig subcfg = cfg.restricted(sub);

    RoundLog sublog;
    auto local = linial_coloring(sub.graph, subcfg, sublog);
    int center_local = static_cast<int>(
        std::lower_bound(ball.begin(), ball.end(), center) - ball.begin());
    CHECK(local.colors[center_local] == full.colors[center]);
}

TEST_CASE("round additivity under sequential composition") {
    Graph g = cycle(32);
    RoundLog log;
    CountdownProgram a{3}, b{5};
    run_program(g, a, log, "a", 100);
    run_program(g, b, log, "b", 100);
    CHECK(log.total_rounds == 8);
    CHECK(log.rounds_by_label.at("a") == 3);
    CHECK(log.rounds_by_label.at("b") == 5);
}

TEST_CASE("subgraph runs: empty subset and full subset") {
    Graph g = cycle(10);
    RoundLog log;
    CountdownProgram prog{4};
    auto none = run_on_subgraph(g, {}, prog, log, "sub", 100);
    CHECK(none.empty());
    CHECK(log.total_rounds == 0);

    std::vector<NodeId> all(10);
    for (int i = 0; i < 10; ++i) all[i] = i;
    auto full = run_on_subgraph(g, all, prog, log, "sub", 100);
    CHECK(full.size() == 10);
    CHECK(log.total_rounds == 4);

    // disconnected halves run sequentially: rounds add up
    auto left = run_on_subgraph(g, {0, 1, 2}, prog, log, "sub", 100);
    auto right = run_on_subgraph(g, {5, 6, 7}, prog, log, "sub", 100);
    CHECK(left.size() == 3);
    CHECK(right.size() == 3);
    CHECK(log.total_rounds == 12);
}

TEST_CASE("round cap triggers") {
    Graph g = cycle(4);
    CountdownProgram prog{50};
    RoundLog log;
    CHECK_THROWS_AS(run_program(g, prog, log, "cap", 10), RoundLimitExceeded);
}

TEST_CASE("config validation") {
    Graph g = cycle(6);
    SimConfig cfg = SimConfig::for_graph(g);
    CHECK_NOTHROW(cfg.validate(g));

    SimConfig dup = cfg;
    dup.ids[1] = dup.ids[0];
    CHECK_THROWS_AS(dup.validate(g), InvalidInput);

    SimConfig colored = cfg;
    colored.initial_coloring = std::vector<Color>{0, 1, 0, 1, 0, 0};  // edge 4-5 and 5-0 clash
    colored.initial_q = 2;
    CHECK_THROWS_AS(colored.validate(g), InvalidInput);
    colored.initial_coloring = std::vector<Color>{0, 1, 0, 1, 0, 1};
    CHECK_NOTHROW(colored.validate(g));

    SimConfig distk = cfg;
    distk.distance_coloring = SimConfig::DistanceColoring{2, 3, {1, 2, 3, 1, 2, 3}};
    CHECK_NOTHROW(distk.validate(g));
    distk.distance_coloring = SimConfig::DistanceColoring{2, 3, {1, 2, 1, 1, 2, 3}};
    CHECK_THROWS_AS(distk.validate(g), InvalidInput);
}

TEST_CASE("parallel log merge takes the maximum") {
    RoundLog main;
    RoundLog a, b;
    a.add_rounds("x", 5);
    a.add_invocation("P_A(2,4)");
    b.add_rounds("y", 9);
    b.add_invocation("P_A(2,4)", 2);
    main.merge_parallel({a, b});
    CHECK(main.total_rounds == 9);
    CHECK(main.rounds_by_label.count("x") == 0);
    CHECK(main.rounds_by_label.at("y") == 9);
    CHECK(main.invocations.at("P_A(2,4)") == 3);
}
