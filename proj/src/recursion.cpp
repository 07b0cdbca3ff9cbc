#include "dcolor/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dcolor {

long long ceil_log2(long long x) {
    long long t = 0;
    while ((1LL << t) < x) ++t;
    return t;
}

TraceNode& TraceNode::add_child(char fam, const Rational& s, long long space, long long nodes,
                                bool base) {
    auto node = std::make_unique<TraceNode>();
    node->family = fam;
    node->slack = s.str();
    node->color_space = space;
    node->node_count = nodes;
    node->base_call = base;
    if (base)
        node->kind = "base";
    else
        node->kind = std::string(fam == 'A' ? "P_A(" : "P_D(") + s.str() + "," +
                     std::to_string(space) + ")";
    children.push_back(std::move(node));
    return *children.back();
}

long long TraceNode::depth() const {
    long long d = 0;
    for (const auto& c : children) d = std::max(d, c->depth());
    return d + 1;
}

long long TraceNode::subtree_size() const {
    long long s = 1;
    for (const auto& c : children) s += c->subtree_size();
    return s;
}

LocalCtx sub_context(const LocalCtx& parent, const std::vector<NodeId>& nodes) {
    Subgraph sub = induce(parent.graph, nodes);
    LocalCtx ctx;
    ctx.graph = std::move(sub.graph);
    ctx.ids.reserve(nodes.size());
    ctx.proper.reserve(nodes.size());
    for (NodeId v : nodes) {
        ctx.ids.push_back(parent.ids[v]);
        ctx.proper.push_back(parent.proper[v]);
    }
    ctx.proper_q = parent.proper_q;
    return ctx;
}

namespace {

// Restrict to `subset` against the already-colored context, re-indexed to
// subset-local node ids.
ListInstance localized_restriction(const Graph& g, const ListInstance& inst,
                                   const std::vector<NodeId>& subset,
                                   const std::vector<Color>& context) {
    ListInstance full = restrict_instance(g, inst, subset, context);
    ListInstance local;
    local.mode = inst.mode;
    local.color_space = inst.color_space;
    local.lists.reserve(subset.size());
    for (NodeId v : subset) local.lists.push_back(std::move(full.lists[v]));
    return local;
}

void check_sub_slack(SolveEnv& env, const Graph& g, const ListInstance& inst, const Rational& s,
                     const char* where) {
    ++env.stats.slack_checks;
    if (!slack_satisfied(g, inst, s)) {
        ++env.stats.slack_violations;
        throw SubInstanceSlackViolation(std::string(where) + ": constructed sub-instance misses slack " +
                                        s.str());
    }
}

// Progressive coloring of one instance graph. Sub-solutions land in batches;
// monochromatic edges between batches are oriented from the later batch to
// the earlier one, edges inside a batch must come oriented by the sub-solver.
class PartialColoring {
public:
    explicit PartialColoring(int n) : color_(n, kUncolored), batch_(n, -1) {}

    bool colored(NodeId v) const { return color_[v] != kUncolored; }
    const std::vector<Color>& colors() const { return color_; }

    void assign(NodeId v, Color c, long long batch) {
        if (colored(v)) throw Error("node colored twice");
        color_[v] = c;
        batch_[v] = batch;
    }

    void absorb(const std::vector<NodeId>& to_local, const Solution& sub, long long batch,
                Color color_offset = 0) {
        for (std::size_t i = 0; i < to_local.size(); ++i) {
            if (sub.colors[i] == kUncolored) continue;
            assign(to_local[i], sub.colors[i] + color_offset, batch);
        }
        for (auto [u, v] : sub.orientation)
            oriented_.emplace_back(to_local[u], to_local[v]);
    }

    Solution finalize(const Graph& g, bool allow_cross_batch_mono) const {
        Solution sol;
        sol.colors = color_;
        sol.orientation = oriented_;
        std::set<std::pair<NodeId, NodeId>> have;
        for (auto [u, v] : oriented_) {
            have.emplace(u, v);
            have.emplace(v, u);
        }
        for (NodeId u = 0; u < g.node_count(); ++u) {
            for (NodeId v : g.neighbors(u)) {
                if (u > v) continue;
                if (color_[u] == kUncolored || color_[u] != color_[v]) continue;
                if (batch_[u] == batch_[v]) {
                    if (!have.count({u, v}))
                        throw Error("monochromatic edge left unoriented by a sub-solver");
                    continue;
                }
                if (!allow_cross_batch_mono && batch_[u] != batch_[v])
                    throw Error("unexpected monochromatic edge across disjoint color spaces");
                if (batch_[u] > batch_[v])
                    sol.orientation.emplace_back(u, v);
                else
                    sol.orientation.emplace_back(v, u);
            }
        }
        return sol;
    }

private:
    std::vector<Color> color_;
    std::vector<long long> batch_;
    std::vector<std::pair<NodeId, NodeId>> oriented_;
};

std::vector<char> participant_mask(const ListInstance& inst) {
    std::vector<char> mask(inst.node_count(), 0);
    for (NodeId v = 0; v < inst.node_count(); ++v) mask[v] = !inst.lists[v].empty();
    return mask;
}

std::vector<Color> distinct_sorted(const std::vector<Color>& values, const std::vector<NodeId>& over) {
    std::vector<Color> out;
    out.reserve(over.size());
    for (NodeId v : over) out.push_back(values[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void require_all_colored(const std::vector<char>& participant, const PartialColoring& pc, int n,
                         const char* who) {
    for (NodeId v = 0; v < n; ++v)
        if (participant[v] && !pc.colored(v))
            throw UncoloredNodeRemains(std::string(who) + ": node " + std::to_string(v) +
                                       " left uncolored");
}

}  // namespace

Solution slack_boost_1_to_2(const LocalCtx& ctx, const ListInstance& inst,
                            const ArbSolverFn& solver2, SolveEnv& env, TraceNode& trace) {
    const Graph& g = ctx.graph;
    if (!slack_satisfied(g, inst, Rational(1)))
        throw SlackTooSmall("slack boost needs an instance of slack 1");
    auto participant = participant_mask(inst);
    PartialColoring pc(g.node_count());

    long long iterations = 0;
    const long long iteration_cap = ceil_log2(g.max_degree() + 1) + 2;
    while (true) {
        std::vector<NodeId> uncolored;
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (participant[v] && !pc.colored(v)) uncolored.push_back(v);
        if (uncolored.empty()) break;

        Subgraph rest = induce(g, uncolored);
        ListInstance rest_inst = localized_restriction(g, inst, uncolored, pc.colors());
        check_sub_slack(env, rest.graph, rest_inst, Rational(1), "residual uncolored instance");

        if (rest.graph.edge_count() == 0) {
            // Degenerate tail: every remaining node picks freely.
            long long batch = env.take_batch();
            for (std::size_t i = 0; i < uncolored.size(); ++i) {
                if (rest_inst.lists[i].empty())
                    throw UncoloredNodeRemains("restricted list ran empty at an uncolorable node");
                pc.assign(uncolored[i], rest_inst.lists[i].front().color, batch);
            }
            continue;
        }

        ++iterations;
        if (iterations > iteration_cap)
            throw Error("slack boost exceeded its iteration bound");

        std::vector<Color> rest_proper;
        rest_proper.reserve(uncolored.size());
        for (NodeId v : uncolored) rest_proper.push_back(ctx.proper[v]);
        ColoringResult parts = defective_coloring(rest.graph, rest_proper, ctx.proper_q,
                                                  Rational(1, 4), env.log, env.cfg->round_cap);

        std::vector<NodeId> all_local(uncolored.size());
        for (std::size_t i = 0; i < uncolored.size(); ++i) all_local[i] = static_cast<NodeId>(i);
        for (Color part : distinct_sorted(parts.colors, all_local)) {
            std::vector<NodeId> active;
            for (std::size_t i = 0; i < uncolored.size(); ++i) {
                NodeId v = uncolored[i];
                if (parts.colors[i] != part || pc.colored(v)) continue;
                long long deg = rest.graph.degree(static_cast<NodeId>(i));
                long long still = 0;
                for (NodeId j : rest.graph.neighbors(static_cast<NodeId>(i)))
                    if (!pc.colored(uncolored[j])) ++still;
                if (2 * still >= deg) active.push_back(v);
            }
            if (active.empty()) continue;

            LocalCtx actx = sub_context(ctx, active);
            ListInstance ainst = localized_restriction(g, inst, active, pc.colors());
            check_sub_slack(env, actx.graph, ainst, Rational(2), "slack-2 part instance");

            TraceNode& tn = trace.add_child('A', Rational(2), inst.color_space,
                                            static_cast<long long>(active.size()));
            env.log.add_invocation(tn.kind);
            ++env.stats.subinstances_A;
            long long before = env.log.total_rounds;
            Solution sub = solver2(actx, ainst, tn);
            tn.rounds = env.log.total_rounds - before;
            pc.absorb(active, sub, env.take_batch());
        }
    }
    trace.stats["iterations"] = iterations;
    require_all_colored(participant, pc, g.node_count(), "slack boost");
    return pc.finalize(g, true);
}

Solution slack_boost_2_to_S(const LocalCtx& ctx, const ListInstance& inst, long long big_s,
                            const ArbSolverFn& solverS, SolveEnv& env, TraceNode& trace) {
    const Graph& g = ctx.graph;
    if (big_s < 2) throw InvalidInput("target slack must be at least 2");
    if (!slack_satisfied(g, inst, Rational(2)))
        throw SlackTooSmall("slack boost needs an instance of slack 2");
    auto participant = participant_mask(inst);
    PartialColoring pc(g.node_count());

    ColoringResult parts = defective_coloring(g, ctx.proper, ctx.proper_q, Rational(1, big_s),
                                              env.log, env.cfg->round_cap);
    trace.stats["part_colors"] = parts.color_count;

    std::vector<NodeId> everyone;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (participant[v]) everyone.push_back(v);
    long long parts_used = 0;
    for (Color part : distinct_sorted(parts.colors, everyone)) {
        std::vector<NodeId> active;
        for (NodeId v : everyone)
            if (parts.colors[v] == part) active.push_back(v);
        ++parts_used;

        LocalCtx actx = sub_context(ctx, active);
        ListInstance ainst = localized_restriction(g, inst, active, pc.colors());
        check_sub_slack(env, actx.graph, ainst, Rational(big_s), "slack-S part instance");

        TraceNode& tn = trace.add_child('A', Rational(big_s), inst.color_space,
                                        static_cast<long long>(active.size()));
        env.log.add_invocation(tn.kind);
        ++env.stats.subinstances_A;
        long long before = env.log.total_rounds;
        Solution sub = solverS(actx, ainst, tn);
        tn.rounds = env.log.total_rounds - before;
        pc.absorb(active, sub, env.take_batch());
    }
    trace.stats["parts_used"] = parts_used;
    require_all_colored(participant, pc, g.node_count(), "slack boost");
    return pc.finalize(g, true);
}

Solution color_space_reduction(const LocalCtx& ctx, const ListInstance& inst, const Rational& slack_s,
                               long long sigma, long long p, const DefSolverFn& def_solver,
                               const ArbSolverFn& residual_solver, SolveEnv& env, TraceNode& trace) {
    const Graph& g = ctx.graph;
    const long long space = inst.color_space;
    if (sigma < 1 || slack_s < Rational(sigma))
        throw InvalidPartition("need 1 <= sigma <= S");
    if (p < 1 || p > space) throw InvalidPartition("need 1 <= p <= C");
    const long long block = (space + p - 1) / p;
    auto participant = participant_mask(inst);

    // Block-assignment instance over {0..p-1}: a node may pick any block its
    // list intersects; the allowed defect is sigma*deg(v) scaled by the
    // block's share of the node's list weight.
    ListInstance assign_inst;
    assign_inst.mode = Mode::Defective;
    assign_inst.color_space = p;
    assign_inst.lists.assign(g.node_count(), {});
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!participant[v]) continue;
        long long total = inst.weight(v);
        long long deg = g.degree(v);
        Color cur_block = -1;
        long long wsum = 0;
        auto flush = [&]() {
            if (cur_block < 0) return;
            __int128 num = static_cast<__int128>(sigma) * deg * wsum;
            long long defect = static_cast<long long>(num / total);
            assign_inst.lists[v].push_back({cur_block, defect});
        };
        for (const auto& cd : inst.lists[v]) {
            Color b = cd.color / block;
            if (b != cur_block) {
                flush();
                cur_block = b;
                wsum = 0;
            }
            wsum += cd.defect + 1;
        }
        flush();
    }
    check_sub_slack(env, g, assign_inst, Rational(sigma), "block-assignment instance");

    TraceNode& dn = trace.add_child('D', Rational(sigma), p, g.node_count());
    env.log.add_invocation(dn.kind);
    ++env.stats.subinstances_D;
    long long before = env.log.total_rounds;
    std::vector<Color> assignment = def_solver(ctx, assign_inst, dn);
    dn.rounds = env.log.total_rounds - before;

    Solution assignment_sol;
    assignment_sol.colors = assignment;
    auto bad = verify_defective(g, assign_inst, assignment_sol);
    if (!bad.empty()) throw DefectExceeded("block assignment violates its defective contract");
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (participant[v] && assignment[v] == kUncolored)
            throw UncoloredNodeRemains("block assignment left a node unassigned");

    // Residual instances live on disjoint color spaces; their rounds combine
    // as a maximum.
    PartialColoring pc(g.node_count());
    std::vector<RoundLog> branch_logs;
    for (long long i = 0; i < p; ++i) {
        std::vector<NodeId> members;
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (participant[v] && assignment[v] == i) members.push_back(v);
        if (members.empty()) continue;

        LocalCtx rctx = sub_context(ctx, members);
        ListInstance rinst;
        rinst.mode = inst.mode;
        rinst.color_space = block;
        rinst.lists.reserve(members.size());
        for (NodeId v : members) {
            std::vector<ColorDefect> lst;
            for (const auto& cd : inst.lists[v])
                if (cd.color / block == i) lst.push_back({cd.color - i * block, cd.defect});
            rinst.lists.push_back(std::move(lst));
        }
        check_sub_slack(env, rctx.graph, rinst, slack_s / Rational(sigma), "residual block instance");

        TraceNode& tn = trace.add_child('A', slack_s / Rational(sigma), block,
                                        static_cast<long long>(members.size()));
        env.log.add_invocation(tn.kind);
        ++env.stats.subinstances_A;
        RoundLog branch;
        std::swap(env.log, branch);
        Solution sub;
        try {
            sub = residual_solver(rctx, rinst, tn);
        } catch (...) {
            std::swap(env.log, branch);
            throw;
        }
        std::swap(env.log, branch);
        tn.rounds = branch.total_rounds;
        branch_logs.push_back(std::move(branch));
        pc.absorb(members, sub, env.take_batch(), /*color_offset=*/i * block);
    }
    env.log.merge_parallel(branch_logs);

    require_all_colored(participant, pc, g.node_count(), "color space reduction");
    return pc.finalize(g, /*allow_cross_batch_mono=*/false);
}

std::vector<Color> defective_from_arbdefective(const LocalCtx& ctx, const ListInstance& inst,
                                               long long theta, long long s_in,
                                               const ArbSolverFn& arb_solver, SolveEnv& env,
                                               TraceNode& trace) {
    const Graph& g = ctx.graph;
    if (inst.mode != Mode::Defective)
        throw InvalidInput("defective_from_arbdefective expects a defective-mode instance");
    ++env.stats.defarb_calls;
    Rational entry(4 * (theta + 1) * (s_in + 1));
    if (!slack_satisfied(g, inst, entry))
        throw SlackTooSmall("entry slack below 4(theta+1)(S+1)");
    ++env.stats.slack_checks;

    // Rounded defects: d'(x)+1 is the largest power of two with
    // 2^j * 2(theta+1) <= d(x)+1, clamped to d' = 0 when none exists.
    const long long scale = 2 * (theta + 1);
    std::vector<std::vector<long long>> dprime(g.node_count());
    std::vector<std::vector<long long>> klass(g.node_count());
    long long max_class = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        dprime[v].reserve(inst.lists[v].size());
        klass[v].reserve(inst.lists[v].size());
        long long weight = 0;
        for (const auto& cd : inst.lists[v]) {
            long long j = 0;
            while ((scale << (j + 1)) <= cd.defect + 1) ++j;
            if ((scale << j) > cd.defect + 1) j = -1;  // below the scale: clamp
            long long dp = (j < 0) ? 0 : (1LL << j) - 1;
            long long cls = (j < 0) ? 0 : j;
            dprime[v].push_back(dp);
            klass[v].push_back(cls);
            max_class = std::max(max_class, cls);
            weight += dp + 1;
        }
        ++env.stats.slack_checks;
        if (weight < (s_in + 1) * g.degree(v)) {
            ++env.stats.slack_violations;
            throw SubInstanceSlackViolation("rounded defect weight below (S+1)*deg");
        }
    }

    // Phases sweep defect classes from large to small. The class range is
    // extended past ceil(log Delta) when rounded defects demand it; the part
    // coloring budget 1/phases keeps the per-part degree in step.
    long long base_phases = std::max<long long>(1, ceil_log2(g.max_degree()));
    long long phases = std::max(base_phases, max_class + 1);
    if (phases > base_phases) ++env.stats.defarb_phase_extensions;
    trace.stats["phases"] = phases;

    ColoringResult parts = defective_coloring(g, ctx.proper, ctx.proper_q, Rational(1, phases),
                                              env.log, env.cfg->round_cap);
    trace.stats["Q"] = parts.color_count;

    auto participant = participant_mask(inst);
    std::vector<NodeId> everyone;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (participant[v]) everyone.push_back(v);
    std::vector<Color> part_ids = distinct_sorted(parts.colors, everyone);

    std::vector<long long> part_degree(g.node_count(), 0);
    for (NodeId v : everyone)
        for (NodeId u : g.neighbors(v))
            if (parts.colors[u] == parts.colors[v]) ++part_degree[v];

    PartialColoring pc(g.node_count());
    long long invocations = 0;
    for (long long phase = phases - 1; phase >= 0; --phase) {
        for (Color part : part_ids) {
            std::vector<NodeId> active;
            std::vector<std::vector<ColorDefect>> pruned;
            for (NodeId v : everyone) {
                if (parts.colors[v] != part || pc.colored(v)) continue;
                long long gamma = 0;
                std::vector<ColorDefect> lst;
                for (std::size_t idx = 0; idx < inst.lists[v].size(); ++idx) {
                    if (klass[v][idx] != phase) continue;
                    Color x = inst.lists[v][idx].color;
                    long long already = 0;
                    for (NodeId u : g.neighbors(v))
                        if (pc.colors()[u] == x) ++already;
                    gamma += dprime[v][idx] + 1 - already;
                    if (already <= dprime[v][idx]) lst.push_back({x, dprime[v][idx] - already});
                }
                if (gamma > s_in * part_degree[v]) {
                    if (lst.empty()) throw Error("active node with empty pruned list");
                    active.push_back(v);
                    pruned.push_back(std::move(lst));
                }
            }
            if (active.empty()) continue;

            LocalCtx actx = sub_context(ctx, active);
            ListInstance ainst;
            ainst.mode = Mode::Arbdefective;
            ainst.color_space = inst.color_space;
            ainst.lists = std::move(pruned);
            check_sub_slack(env, actx.graph, ainst, Rational(s_in), "phase instance");

            TraceNode& tn = trace.add_child('A', Rational(s_in), inst.color_space,
                                            static_cast<long long>(active.size()));
            env.log.add_invocation(tn.kind);
            ++env.stats.subinstances_A;
            ++invocations;
            long long before = env.log.total_rounds;
            Solution sub = arb_solver(actx, ainst, tn);
            tn.rounds = env.log.total_rounds - before;
            pc.absorb(active, sub, env.take_batch());
        }
    }
    trace.stats["arb_invocations"] = invocations;

    for (NodeId v : everyone)
        if (!pc.colored(v)) throw UncoloredNodeRemains("defect-class sweep left a node uncolored");

    Solution with_orientation = pc.finalize(g, true);
    Solution plain;
    plain.colors = with_orientation.colors;
    auto bad = verify_defective(g, inst, plain);
    if (!bad.empty()) throw DefectExceeded("defective contract violated after the class sweep");

    // Structural audit: out-neighbors within the rounded defect, total
    // same-colored neighbors within 2(theta+1) times it.
    std::vector<long long> out_same(g.node_count(), 0);
    for (auto [u, v] : with_orientation.orientation)
        if (with_orientation.colors[u] == with_orientation.colors[v]) ++out_same[u];
    for (NodeId v : everyone) {
        Color x = with_orientation.colors[v];
        long long dp = -1;
        for (std::size_t idx = 0; idx < inst.lists[v].size(); ++idx)
            if (inst.lists[v][idx].color == x) dp = dprime[v][idx];
        if (dp < 0) throw DefectExceeded("node colored outside its list");
        long long same = 0;
        for (NodeId u : g.neighbors(v))
            if (with_orientation.colors[u] == x) ++same;
        if (out_same[v] > dp || same > 2 * (theta + 1) * dp)
            throw DefectExceeded("rounded-defect decomposition bound violated");
    }
    return plain.colors;
}

EpsPolicy eps_policy_from_name(const std::string& name) {
    if (name == "half") return EpsPolicy::Half;
    if (name == "loglog") return EpsPolicy::LogLog;
    if (name == "auto") return EpsPolicy::Auto;
    throw InvalidInput("unknown eps policy: " + name);
}

std::string eps_policy_name(EpsPolicy p) {
    switch (p) {
        case EpsPolicy::Half: return "half";
        case EpsPolicy::LogLog: return "loglog";
        default: return "auto";
    }
}

double epsilon_for(EpsPolicy policy, long long theta, long long max_degree, long long color_space) {
    double delta = std::max<double>(2.0, static_cast<double>(max_degree));
    double log_delta = std::log2(delta);
    if (policy == EpsPolicy::Half) return 0.5;
    if (policy == EpsPolicy::Auto) {
        // Crossover: prefer 1/2 once theta^8 outgrows ceil(log D)^(3 loglog D).
        double lhs = 8.0 * std::log(std::max<double>(1.0, static_cast<double>(theta)));
        double rhs = 3.0 * std::log2(std::max(2.0, log_delta)) *
                     std::log(std::ceil(std::max(2.0, log_delta)));
        if (lhs > rhs) return 0.5;
    }
    double lll = std::log2(std::max(1.0001, std::log2(std::max(1.0001, log_delta))));
    double llc = std::log2(std::max(1.0001, std::log2(std::max(2.0, static_cast<double>(color_space)))));
    double eps = lll / llc;
    if (!(eps > 0.0)) eps = 0.5;
    return std::clamp(eps, 0.05, 0.5);
}

long long subspace_count(long long color_space, double eps) {
    double raw = std::pow(static_cast<double>(color_space), eps);
    long long p = static_cast<long long>(std::ceil(raw - 1e-9));
    return std::clamp<long long>(p, 2, color_space);
}

long long inner_slack_for(long long theta) {
    long long s = 1;
    while (4 * (theta + 1) * (s + 2) <= 16 * theta) ++s;
    return s;
}

namespace {

struct Pipeline {
    SolveEnv* env;
    EpsPolicy policy;

    Solution solve_pa2(const LocalCtx& ctx, const ListInstance& inst, TraceNode& tn) {
        ++env->depth;
        env->stats.max_depth = std::max(env->stats.max_depth, env->depth);
        Solution out = solve_pa2_inner(ctx, inst, tn);
        --env->depth;
        return out;
    }

    Solution solve_pa2_inner(const LocalCtx& ctx, const ListInstance& inst, TraceNode& tn) {
        const long long space = inst.color_space;
        const long long threshold = std::max<long long>(4, ceil_log2(env->cfg->max_degree));
        if (space <= threshold) {
            ++env->stats.base_calls;
            TraceNode& leaf = tn.add_child('A', Rational(1), space, ctx.graph.node_count(),
                                           /*base=*/true);
            long long before = env->log.total_rounds;
            Solution sol = base_arbdefective(ctx.graph, inst, ctx.proper, ctx.proper_q, env->log,
                                             env->cfg->round_cap);
            leaf.rounds = env->log.total_rounds - before;
            return sol;
        }

        const long long theta = std::max<long long>(1, env->cfg->theta);
        const long long big_s = 32 * theta;
        const long long sigma = 16 * theta;
        const long long s_in = inner_slack_for(theta);
        const double eps = epsilon_for(policy, theta, env->cfg->max_degree, space);
        const long long p = subspace_count(space, eps);
        tn.stats["p"] = p;

        ArbSolverFn inner_arb = [&](const LocalCtx& ictx, const ListInstance& iinst, TraceNode& itn) {
            if (s_in == 1) {
                ArbSolverFn rec2 = [&](const LocalCtx& c2, const ListInstance& i2, TraceNode& t2) {
                    return solve_pa2(c2, i2, t2);
                };
                return slack_boost_1_to_2(ictx, iinst, rec2, *env, itn);
            }
            return solve_pa2(ictx, iinst, itn);
        };
        DefSolverFn def_solver = [&](const LocalCtx& dctx, const ListInstance& dinst, TraceNode& dtn) {
            return defective_from_arbdefective(dctx, dinst, theta, s_in, inner_arb, *env, dtn);
        };
        ArbSolverFn residual = [&](const LocalCtx& rctx, const ListInstance& rinst, TraceNode& rtn) {
            return solve_pa2(rctx, rinst, rtn);
        };
        ArbSolverFn per_part = [&](const LocalCtx& actx, const ListInstance& ainst, TraceNode& atn) {
            return color_space_reduction(actx, ainst, Rational(big_s), sigma, p, def_solver, residual,
                                         *env, atn);
        };
        return slack_boost_2_to_S(ctx, inst, big_s, per_part, *env, tn);
    }
};

}  // namespace

SolveResult solve_main(const Graph& g, const SimConfig& cfg, const ListInstance& inst,
                       const SolveOptions& opt) {
    cfg.validate(g);
    inst.validate(g);
    if (inst.mode != Mode::Arbdefective)
        throw InvalidInput("top-level solver expects an arbdefective instance");

    SimConfig local_cfg = cfg;
    local_cfg.round_cap = opt.round_cap;

    SolveEnv env;
    env.cfg = &local_cfg;

    RecursionTrace trace;
    trace.root = std::make_unique<TraceNode>();
    trace.root->kind = "P_A(1," + std::to_string(inst.color_space) + ")";
    trace.root->family = 'A';
    trace.root->slack = "1";
    trace.root->color_space = inst.color_space;
    trace.root->node_count = g.node_count();

    ColoringResult initial = linial_coloring(g, local_cfg, env.log);

    LocalCtx root;
    root.graph = g;
    root.ids = local_cfg.ids;
    root.proper = initial.colors;
    root.proper_q = initial.color_count;

    Pipeline pipe{&env, opt.eps_policy};
    ArbSolverFn solver2 = [&](const LocalCtx& c, const ListInstance& i, TraceNode& t) {
        return pipe.solve_pa2(c, i, t);
    };
    Solution sol = slack_boost_1_to_2(root, inst, solver2, env, *trace.root);
    trace.root->rounds = env.log.total_rounds;

    auto bad = verify_arbdefective(g, inst, sol);
    if (!bad.empty()) throw Error("final solution failed verification");

    SolveResult result;
    result.solution = std::move(sol);
    result.log = std::move(env.log);
    result.stats = env.stats;
    result.trace = std::move(trace);
    return result;
}

}  // namespace dcolor
