#pragma once

#include <string>
#include <vector>

#include "dcolor/instance.hpp"
#include "dcolor/rational.hpp"
#include "dcolor/sim.hpp"

namespace dcolor {

/// One iteration of polynomial color reduction: colors in [0, p^{k+1}) are
/// read as degree-<=k polynomials over F_p; a node's new color is the pair
/// (evaluation point, value), i.e. a value in [0, p^2).
struct ReductionStep {
    int k = 0;
    long long p = 0;
};

bool is_prime(long long x);
long long next_prime(long long x);
/// Smallest t >= 1 with t^e >= m.
long long ceil_root(long long m, int e);

/// Iterated reduction schedule for proper colorings starting from a space of
/// size `start_space` on graphs of maximum degree `max_degree`. Each step uses
/// the smallest k whose field (prime p >= max(k*Delta+1, ceil(m^{1/(k+1)})))
/// strictly shrinks the space; stops at the first stall.
std::vector<ReductionStep> linial_schedule(long long start_space, int max_degree);

/// Budgeted schedule for defective reduction: iteration i of T is allowed
/// alpha * 2^(i-T-1) new conflicts per unit degree (the last iteration gets
/// the largest share); the largest T whose whole trajectory keeps shrinking
/// is used. Empty schedule = the input coloring is already the answer.
std::vector<ReductionStep> defective_schedule(long long start_space, const Rational& alpha);

struct ColoringResult {
    std::vector<Color> colors;
    long long color_count = 0;  // size of the final color space
};

/// Proper coloring with at most c1*Delta^2-ish colors from unique ids or a
/// supplied proper coloring, in O(log* q) reduction rounds.
ColoringResult linial_coloring(const Graph& g, const SimConfig& cfg, RoundLog& log);

/// Defective coloring from a proper q-coloring: every node ends with at most
/// floor(alpha*deg(v)) same-colored neighbors (checked). The number of colors
/// is recorded, not bounded.
ColoringResult defective_coloring(const Graph& g, const std::vector<Color>& proper, long long q,
                                  const Rational& alpha, RoundLog& log, long long round_cap);

/// List arbdefective solver for slack >= 1: reduce the supplied proper
/// coloring, then sweep its color classes; each node greedily takes the
/// lowest listed color whose earlier-colored neighbor count is within the
/// defect, orienting monochromatic edges toward earlier-colored endpoints.
Solution base_arbdefective(const Graph& g, const ListInstance& inst, const std::vector<Color>& proper,
                           long long q, RoundLog& log, long long round_cap);

}  // namespace dcolor
