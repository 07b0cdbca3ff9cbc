#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcolor/graph.hpp"

namespace dcolor {

/// Round accounting for a simulated execution. `rounds_by_label` always sums
/// to `total_rounds`; `invocations` counts sub-instance solver calls by
/// problem family (e.g. "P_A(2,16)").
struct RoundLog {
    long long total_rounds = 0;
    std::map<std::string, long long> rounds_by_label;
    std::map<std::string, long long> invocations;

    void add_rounds(const std::string& label, long long r) {
        if (r == 0) return;
        total_rounds += r;
        rounds_by_label[label] += r;
    }
    void add_invocation(const std::string& label, long long k = 1) { invocations[label] += k; }

    void merge_sequential(const RoundLog& other) {
        total_rounds += other.total_rounds;
        for (const auto& [k, v] : other.rounds_by_label) rounds_by_label[k] += v;
        for (const auto& [k, v] : other.invocations) invocations[k] += v;
    }

    /// Parallel composition: rounds cost the maximum over branches (ties to
    /// the first maximal branch); invocation counts sum.
    void merge_parallel(const std::vector<RoundLog>& branches) {
        const RoundLog* widest = nullptr;
        for (const auto& b : branches)
            if (!widest || b.total_rounds > widest->total_rounds) widest = &b;
        if (widest) {
            total_rounds += widest->total_rounds;
            for (const auto& [k, v] : widest->rounds_by_label) rounds_by_label[k] += v;
        }
        for (const auto& b : branches)
            for (const auto& [k, v] : b.invocations) invocations[k] += v;
    }
};

/// Network-wide knowledge handed to every node: unique ids, optional input
/// colorings, and the global constants the algorithms branch on.
struct SimConfig {
    std::vector<long long> ids;
    long long id_space = 0;  // ids live in [0, id_space)

    std::optional<std::vector<Color>> initial_coloring;  // proper, colors in [0, initial_q)
    long long initial_q = 0;

    struct DistanceColoring {
        int k = 1;
        long long c = 0;  // colors in [1, c]
        std::vector<Color> colors;
    };
    std::optional<DistanceColoring> distance_coloring;

    long long n = 0;
    long long max_degree = 0;
    long long theta = 0;
    long long color_space = 0;
    long long round_cap = 1'000'000;

    /// Default config: ids 0..n-1, globals from the graph (theta left 0).
    static SimConfig for_graph(const Graph& g);

    void validate(const Graph& g) const;

    /// Config for an induced subgraph: ids and colorings follow the node map,
    /// global constants are inherited.
    SimConfig restricted(const Subgraph& sub) const;
};

namespace detail {
[[noreturn]] void throw_round_limit(long long cap);
}

/// Synchronous execution of a node program on g. Programs provide:
///   State init(int v);
///   bool done(const State&, int v) const;
///   std::optional<Msg> message(const State&, int v) const;
///   void update(State&, int v, const std::vector<const Msg*>& inbox);
///   Output output(const State&, int v) const;
/// Messages produced in a round are delivered at the next round; `inbox` is
/// aligned with g.neighbors(v) (nullptr = silent neighbor). Execution stops
/// once every node's termination predicate holds; the number of executed
/// rounds is charged to `label`.
template <class P>
std::vector<typename P::Output> run_program(const Graph& g, P& prog, RoundLog& log,
                                            const std::string& label, long long round_cap) {
    int n = g.node_count();
    std::vector<typename P::State> st;
    st.reserve(n);
    for (int v = 0; v < n; ++v) st.push_back(prog.init(v));

    auto all_done = [&]() {
        for (int v = 0; v < n; ++v)
            if (!prog.done(st[v], v)) return false;
        return true;
    };

    std::vector<std::optional<typename P::Msg>> outbox(n);
    std::vector<const typename P::Msg*> inbox;
    long long rounds = 0;
    while (!all_done()) {
        if (rounds >= round_cap) detail::throw_round_limit(round_cap);
        for (int v = 0; v < n; ++v) outbox[v] = prog.message(st[v], v);
        for (int v = 0; v < n; ++v) {
            const auto& nb = g.neighbors(v);
            inbox.assign(nb.size(), nullptr);
            for (std::size_t j = 0; j < nb.size(); ++j)
                if (outbox[nb[j]]) inbox[j] = &*outbox[nb[j]];
            prog.update(st[v], v, inbox);
        }
        ++rounds;
    }
    log.add_rounds(label, rounds);

    std::vector<typename P::Output> out;
    out.reserve(n);
    for (int v = 0; v < n; ++v) out.push_back(prog.output(st[v], v));
    return out;
}

/// Same contract restricted to G[subset]; nodes outside are inert. Rounds are
/// charged to the same global log. Program node indices are subset-local.
template <class P>
std::vector<typename P::Output> run_on_subgraph(const Graph& g, const std::vector<NodeId>& subset,
                                                P& prog, RoundLog& log, const std::string& label,
                                                long long round_cap) {
    Subgraph sub = induce(g, subset);
    return run_program(sub.graph, prog, log, label, round_cap);
}

}  // namespace dcolor
