#pragma once

#include <cstdint>

#include "dcolor/instance.hpp"
#include "dcolor/rational.hpp"

namespace dcolor {

/// Configuration-model r-uniform hypergraph with every node of degree d
/// (requires r | n*d). Stub groups containing a repeated node trigger a full
/// reshuffle. Deterministic under seed.
Hypergraph gen_hypergraph(int n, int r, int d, std::uint64_t seed);

/// Random instance with slack exactly in (S, 2S]: every non-isolated node
/// gets list weight floor(S*deg)+1. Requires C >= 2 and S >= 1.
ListInstance gen_instance(const Graph& g, long long color_space, const Rational& slack,
                          Mode mode, std::uint64_t seed);

/// Lists {0..Delta}, all defects zero; the standard greedy-feasible instance.
ListInstance delta_plus_one_instance(const Graph& g);

/// Random graph with m edges sampled without replacement, max degree capped.
Graph gen_random_graph(int n, long long edge_target, int max_degree_cap, std::uint64_t seed);

}  // namespace dcolor
