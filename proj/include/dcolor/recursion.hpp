#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dcolor/instance.hpp"
#include "dcolor/primitives.hpp"
#include "dcolor/sim.hpp"

namespace dcolor {

/// Smallest t >= 0 with 2^t >= x (x >= 1).
long long ceil_log2(long long x);

/// Record of one sub-problem in the recursion tree. `kind` follows the
/// problem-family notation, e.g. "P_A(2,16)" or "P_D(48,4)"; leaves are
/// base-solver calls.
struct TraceNode {
    std::string kind;
    char family = 'A';
    std::string slack;
    long long color_space = 0;
    long long node_count = 0;
    long long rounds = 0;
    bool base_call = false;
    std::map<std::string, long long> stats;
    std::vector<std::unique_ptr<TraceNode>> children;

    TraceNode& add_child(char family, const Rational& slack, long long space, long long nodes,
                         bool base = false);
    long long depth() const;       // levels below and including this node
    long long subtree_size() const;
};

struct RecursionTrace {
    std::unique_ptr<TraceNode> root;
};

struct SolveStats {
    long long slack_checks = 0;       // sub-instance slack assertions evaluated
    long long slack_violations = 0;   // should stay 0; a violation also throws
    long long subinstances_A = 0;
    long long subinstances_D = 0;
    long long base_calls = 0;
    long long defarb_calls = 0;
    long long defarb_phase_extensions = 0;  // calls needing more phases than ceil(log Delta)
    long long max_depth = 0;
};

/// Mutable state threaded through one top-level solve.
struct SolveEnv {
    const SimConfig* cfg = nullptr;
    RoundLog log;
    SolveStats stats;
    long long next_batch = 0;
    long long depth = 0;

    long long take_batch() { return next_batch++; }
};

/// Per-subproblem context: the (induced) instance graph with inherited ids
/// and a proper coloring usable as reduction seed.
struct LocalCtx {
    Graph graph;
    std::vector<long long> ids;
    std::vector<Color> proper;
    long long proper_q = 1;
};

LocalCtx sub_context(const LocalCtx& parent, const std::vector<NodeId>& nodes);

using ArbSolverFn =
    std::function<Solution(const LocalCtx&, const ListInstance&, TraceNode&)>;
using DefSolverFn =
    std::function<std::vector<Color>(const LocalCtx&, const ListInstance&, TraceNode&)>;

/// Slack-1 -> slack-2 driver: repeatedly partition the uncolored subgraph
/// with a 1/4-defective coloring and color the parts whose nodes still have
/// at least half their neighbors uncolored, restarting on the residual
/// subgraph until everything is colored.
Solution slack_boost_1_to_2(const LocalCtx& ctx, const ListInstance& inst,
                            const ArbSolverFn& solver2, SolveEnv& env, TraceNode& trace);

/// Slack-2 -> slack-S driver: one 1/S-defective partition, every part colored
/// sequentially through `solverS`.
Solution slack_boost_2_to_S(const LocalCtx& ctx, const ListInstance& inst, long long big_s,
                            const ArbSolverFn& solverS, SolveEnv& env, TraceNode& trace);

/// Split the color space into p contiguous blocks, assign each node a block
/// through a defective instance with slack sigma, then solve the p residual
/// arbdefective instances on disjoint color spaces in parallel.
Solution color_space_reduction(const LocalCtx& ctx, const ListInstance& inst, const Rational& slack_s,
                               long long sigma, long long p, const DefSolverFn& def_solver,
                               const ArbSolverFn& residual_solver, SolveEnv& env, TraceNode& trace);

/// Solve a list defective instance using an arbdefective solver: round the
/// defects down to powers of two scaled by 1/(2(theta+1)), partition with a
/// defective coloring, and sweep defect classes from large to small, coloring
/// the nodes whose remaining class weight exceeds S_in times their part degree.
std::vector<Color> defective_from_arbdefective(const LocalCtx& ctx, const ListInstance& inst,
                                               long long theta, long long s_in,
                                               const ArbSolverFn& arb_solver, SolveEnv& env,
                                               TraceNode& trace);

enum class EpsPolicy { Half, LogLog, Auto };

EpsPolicy eps_policy_from_name(const std::string& name);
std::string eps_policy_name(EpsPolicy p);

/// Exponent for the subspace count p = ceil(C^eps).
double epsilon_for(EpsPolicy policy, long long theta, long long max_degree, long long color_space);
long long subspace_count(long long color_space, double eps);
/// Largest s >= 1 with 4(theta+1)(s+1) <= 16*theta.
long long inner_slack_for(long long theta);

struct SolveOptions {
    EpsPolicy eps_policy = EpsPolicy::Auto;
    long long round_cap = 1'000'000;
};

struct SolveResult {
    Solution solution;
    RoundLog log;
    SolveStats stats;
    RecursionTrace trace;
};

/// End-to-end solver for arbdefective instances with slack >= 1 on graphs of
/// neighborhood independence theta (taken from cfg.theta): computes an initial
/// proper coloring, then runs the recursive machinery. The returned solution
/// is verified before returning.
SolveResult solve_main(const Graph& g, const SimConfig& cfg, const ListInstance& inst,
                       const SolveOptions& opt);

}  // namespace dcolor
