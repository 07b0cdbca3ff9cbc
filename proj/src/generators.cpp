#include "dcolor/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

namespace dcolor {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

}  // namespace

Hypergraph gen_hypergraph(int n, int r, int d, std::uint64_t seed) {
    if (n < 1 || r < 1 || d < 1) throw InfeasibleParams("need n, r, d >= 1");
    if ((static_cast<long long>(n) * d) % r != 0)
        throw InfeasibleParams("n*d must be divisible by r");
    std::mt19937_64 rng(seed);
    long long m = static_cast<long long>(n) * d / r;

    std::vector<NodeId> stubs;
    stubs.reserve(n * d);
    for (NodeId v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);

    for (int attempt = 0; attempt < 5000; ++attempt) {
        shuffle_vec(stubs, rng);
        std::vector<std::vector<NodeId>> edges;
        edges.reserve(m);
        bool ok = true;
        for (long long e = 0; e < m && ok; ++e) {
            std::vector<NodeId> group(stubs.begin() + e * r, stubs.begin() + (e + 1) * r);
            std::sort(group.begin(), group.end());
            if (std::adjacent_find(group.begin(), group.end()) != group.end()) ok = false;
            edges.push_back(std::move(group));
        }
        if (ok) return Hypergraph::make(n, std::move(edges));
    }
    throw InfeasibleParams("could not draw a simple stub pairing; parameters too tight");
}

ListInstance gen_instance(const Graph& g, long long color_space, const Rational& slack,
                          Mode mode, std::uint64_t seed) {
    if (color_space < 2) throw InfeasibleParams("need color space >= 2");
    if (slack < Rational(1)) throw InfeasibleParams("need slack target >= 1");
    std::mt19937_64 rng(seed);

    ListInstance inst;
    inst.mode = mode;
    inst.color_space = color_space;
    inst.lists.assign(g.node_count(), {});

    std::vector<Color> palette(color_space);
    for (long long c = 0; c < color_space; ++c) palette[c] = c;

    for (NodeId v = 0; v < g.node_count(); ++v) {
        long long deg = g.degree(v);
        if (deg == 0) {
            inst.lists[v].push_back({static_cast<Color>(draw(rng, color_space)), 0});
            continue;
        }
        // weight floor(S*deg)+1: smallest integer strictly above S*deg, and
        // at most 2S*deg, so the instance is tight at every node.
        long long need = static_cast<long long>(
                             (static_cast<__int128>(slack.num()) * deg) / slack.den()) + 1;
        long long list_len = 1 + static_cast<long long>(draw(rng, std::min(color_space, need)));
        shuffle_vec(palette, rng);
        std::vector<ColorDefect> lst;
        lst.reserve(list_len);
        for (long long i = 0; i < list_len; ++i) lst.push_back({palette[i], 0});
        for (long long unit = need - list_len; unit > 0; --unit)
            ++lst[draw(rng, lst.size())].defect;
        std::sort(lst.begin(), lst.end(),
                  [](const ColorDefect& a, const ColorDefect& b) { return a.color < b.color; });
        inst.lists[v] = std::move(lst);
    }

    if (!slack_satisfied(g, inst, slack)) throw Error("generated instance misses its slack target");
    if (g.edge_count() > 0 && slack_satisfied(g, inst, slack * Rational(2)))
        throw Error("generated instance is not tight anywhere");
    return inst;
}

ListInstance delta_plus_one_instance(const Graph& g) {
    ListInstance inst;
    inst.mode = Mode::Arbdefective;
    inst.color_space = g.max_degree() + 1;
    inst.lists.assign(g.node_count(), {});
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (Color c = 0; c <= g.max_degree(); ++c) inst.lists[v].push_back({c, 0});
    return inst;
}

Graph gen_random_graph(int n, long long edge_target, int max_degree_cap, std::uint64_t seed) {
    if (n < 1) throw InfeasibleParams("need n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<NodeId, NodeId>> all;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) all.emplace_back(u, v);
    shuffle_vec(all, rng);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<NodeId, NodeId>> pick;
    for (auto [u, v] : all) {
        if (static_cast<long long>(pick.size()) >= edge_target) break;
        if (deg[u] >= max_degree_cap || deg[v] >= max_degree_cap) continue;
        ++deg[u];
        ++deg[v];
        pick.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(pick));
}

}  // namespace dcolor
