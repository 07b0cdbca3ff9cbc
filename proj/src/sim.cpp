#include "dcolor/sim.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "dcolor/errors.hpp"

namespace dcolor {

namespace detail {
void throw_round_limit(long long cap) {
    throw RoundLimitExceeded("round cap " + std::to_string(cap) + " exceeded");
}
}  // namespace detail

SimConfig SimConfig::for_graph(const Graph& g) {
    SimConfig cfg;
    cfg.ids.resize(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) cfg.ids[v] = v;
    cfg.id_space = g.node_count();
    cfg.n = g.node_count();
    cfg.max_degree = g.max_degree();
    return cfg;
}

void SimConfig::validate(const Graph& g) const {
    if (static_cast<int>(ids.size()) != g.node_count())
        throw InvalidInput("id vector size mismatch");
    std::set<long long> seen;
    for (long long id : ids) {
        if (id < 0 || id >= id_space) throw InvalidInput("id outside id space");
        if (!seen.insert(id).second) throw InvalidInput("duplicate node id");
    }
    if (initial_coloring) {
        if (static_cast<int>(initial_coloring->size()) != g.node_count())
            throw InvalidInput("initial coloring size mismatch");
        for (Color c : *initial_coloring)
            if (c < 0 || c >= initial_q) throw InvalidInput("initial coloring outside [0,q)");
        if (!check_proper(g, *initial_coloring).empty())
            throw InvalidInput("supplied initial coloring is not proper");
    }
    if (distance_coloring) {
        const auto& dc = *distance_coloring;
        if (static_cast<int>(dc.colors.size()) != g.node_count())
            throw InvalidInput("distance coloring size mismatch");
        for (Color c : dc.colors)
            if (c < 1 || c > dc.c) throw InvalidInput("distance coloring outside [1,c]");
        // Distance-k properness: any two distinct nodes within k hops differ.
        for (int s = 0; s < g.node_count(); ++s) {
            std::vector<int> dist(g.node_count(), -1);
            std::queue<int> q;
            q.push(s);
            dist[s] = 0;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                if (dist[u] == dc.k) continue;
                for (NodeId w : g.neighbors(u))
                    if (dist[w] == -1) {
                        dist[w] = dist[u] + 1;
                        if (w != s && dc.colors[w] == dc.colors[s])
                            throw InvalidInput("distance coloring not proper at distance k");
                        q.push(w);
                    }
            }
        }
    }
    if (n != g.node_count()) throw InvalidInput("config n mismatch");
    if (max_degree < g.max_degree()) throw InvalidInput("config max_degree below true maximum");
}

SimConfig SimConfig::restricted(const Subgraph& sub) const {
    SimConfig out = *this;
    out.ids.clear();
    out.ids.reserve(sub.to_parent.size());
    for (NodeId v : sub.to_parent) out.ids.push_back(ids[v]);
    if (initial_coloring) {
        std::vector<Color> col;
        col.reserve(sub.to_parent.size());
        for (NodeId v : sub.to_parent) col.push_back((*initial_coloring)[v]);
        out.initial_coloring = std::move(col);
    }
    if (distance_coloring) {
        auto dc = *distance_coloring;
        std::vector<Color> col;
        col.reserve(sub.to_parent.size());
        for (NodeId v : sub.to_parent) col.push_back(dc.colors[v]);
        dc.colors = std::move(col);
        out.distance_coloring = std::move(dc);
    }
    return out;
}

}  // namespace dcolor
