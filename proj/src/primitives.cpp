#include "dcolor/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace dcolor {

bool is_prime(long long x) {
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

long long next_prime(long long x) {
    if (x < 2) x = 2;
    while (!is_prime(x)) ++x;
    return x;
}

long long ceil_root(long long m, int e) {
    if (m <= 1) return 1;
    auto pow_at_least = [&](long long t) {
        __int128 acc = 1;
        for (int i = 0; i < e; ++i) {
            acc *= t;
            if (acc >= m) return true;
        }
        return acc >= m;
    };
    long long t = static_cast<long long>(std::floor(std::pow(static_cast<double>(m), 1.0 / e)));
    t = std::max<long long>(1, t - 2);
    while (!pow_at_least(t)) ++t;
    return t;
}

std::vector<ReductionStep> linial_schedule(long long start_space, int max_degree) {
    std::vector<ReductionStep> steps;
    long long m = start_space;
    while (true) {
        std::optional<ReductionStep> found;
        for (int k = 1; k <= 40; ++k) {
            long long p = next_prime(std::max<long long>(static_cast<long long>(k) * max_degree + 1,
                                                         ceil_root(m, k + 1)));
            if (p * p < m) {
                found = ReductionStep{k, p};
                break;
            }
        }
        if (!found) break;
        steps.push_back(*found);
        m = found->p * found->p;
    }
    return steps;
}

namespace {

// Per-iteration field for budget alpha_i on a space of size m, or nullopt if
// no k shrinks the space.
std::optional<ReductionStep> budget_step(long long m, long long budget_num, long long budget_den) {
    for (int k = 1; k <= 40; ++k) {
        __int128 need128 = (static_cast<__int128>(k) * budget_den + budget_num - 1) / budget_num;
        if (need128 > (static_cast<__int128>(1) << 40)) continue;
        long long need = static_cast<long long>(need128);
        long long p = next_prime(std::max(need, ceil_root(m, k + 1)));
        if (p * p < m) return ReductionStep{k, p};
    }
    return std::nullopt;
}

}  // namespace

std::vector<ReductionStep> defective_schedule(long long start_space, const Rational& alpha) {
    for (int t_total = 24; t_total >= 1; --t_total) {
        std::vector<ReductionStep> steps;
        long long m = start_space;
        bool ok = true;
        for (int i = 1; i <= t_total; ++i) {
            // alpha_i = alpha / 2^(t_total + 1 - i); the last iteration gets alpha/2
            int shift = t_total + 1 - i;
            __int128 den128 = static_cast<__int128>(alpha.den()) << shift;
            if (den128 > (static_cast<__int128>(1) << 60)) {
                ok = false;
                break;
            }
            auto step = budget_step(m, alpha.num(), static_cast<long long>(den128));
            if (!step) {
                ok = false;
                break;
            }
            steps.push_back(*step);
            m = step->p * step->p;
        }
        if (ok) return steps;
    }
    return {};
}

namespace {

long long poly_eval(long long color, int k, long long p, long long x) {
    long long val = 0, xpow = 1, rest = color;
    for (int j = 0; j <= k; ++j) {
        long long coeff = rest % p;
        rest /= p;
        val = (val + coeff * xpow) % p;
        xpow = (xpow * x) % p;
    }
    return val;
}

struct ReductionState {
    long long color = 0;
    std::size_t step = 0;
};

// Proper-coloring reduction: pick the lowest evaluation point with no
// collision against any differently-colored neighbor (one exists because
// p > k*Delta).
class LinialProgram {
public:
    using State = ReductionState;
    using Msg = long long;
    using Output = long long;

    LinialProgram(std::vector<long long> init, std::vector<ReductionStep> steps)
        : init_(std::move(init)), steps_(std::move(steps)) {}

    State init(int v) const { return {init_[v], 0}; }
    bool done(const State& s, int) const { return s.step >= steps_.size(); }
    std::optional<Msg> message(const State& s, int) const { return s.color; }

    void update(State& s, int, const std::vector<const Msg*>& inbox) {
        if (s.step >= steps_.size()) return;
        auto [k, p] = steps_[s.step];
        long long chosen = -1;
        for (long long x = 0; x < p && chosen < 0; ++x) {
            long long own = poly_eval(s.color, k, p, x);
            bool clash = false;
            for (std::size_t j = 0; j < inbox.size() && !clash; ++j) {
                if (!inbox[j]) continue;
                long long c = *inbox[j];
                if (c != s.color && poly_eval(c, k, p, x) == own) clash = true;
            }
            if (!clash) chosen = x;
        }
        if (chosen < 0)
            throw Error("no conflict-free evaluation point; input coloring was not proper");
        s.color = chosen * p + poly_eval(s.color, k, p, chosen);
        ++s.step;
    }

    Output output(const State& s, int) const { return s.color; }

private:
    std::vector<long long> init_;
    std::vector<ReductionStep> steps_;
};

// Defective reduction: pick the evaluation point minimizing the number of
// neighbors evaluating to the same value (ties to the lowest point).
// Same-colored neighbors collide everywhere, so the count carries the
// accumulated defect forward.
class DefectiveReductionProgram {
public:
    using State = ReductionState;
    using Msg = long long;
    using Output = long long;

    DefectiveReductionProgram(std::vector<long long> init, std::vector<ReductionStep> steps)
        : init_(std::move(init)), steps_(std::move(steps)) {}

    State init(int v) const { return {init_[v], 0}; }
    bool done(const State& s, int) const { return s.step >= steps_.size(); }
    std::optional<Msg> message(const State& s, int) const { return s.color; }

    void update(State& s, int, const std::vector<const Msg*>& inbox) {
        if (s.step >= steps_.size()) return;
        auto [k, p] = steps_[s.step];
        long long best_x = 0, best_clashes = -1;
        for (long long x = 0; x < p; ++x) {
            long long own = poly_eval(s.color, k, p, x);
            long long clashes = 0;
            for (const Msg* m : inbox) {
                if (!m) continue;
                if (poly_eval(*m, k, p, x) == own) ++clashes;
            }
            if (best_clashes < 0 || clashes < best_clashes) {
                best_clashes = clashes;
                best_x = x;
            }
        }
        s.color = best_x * p + poly_eval(s.color, k, p, best_x);
        ++s.step;
    }

    Output output(const State& s, int) const { return s.color; }

private:
    std::vector<long long> init_;
    std::vector<ReductionStep> steps_;
};

}  // namespace

ColoringResult linial_coloring(const Graph& g, const SimConfig& cfg, RoundLog& log) {
    std::vector<long long> init;
    long long space;
    if (cfg.initial_coloring) {
        init = *cfg.initial_coloring;
        space = cfg.initial_q;
    } else {
        init = cfg.ids;
        space = cfg.id_space;
    }
    if (g.edge_count() == 0) return {std::vector<Color>(g.node_count(), 0), 1};

    auto steps = linial_schedule(space, g.max_degree());
    long long count = steps.empty() ? space : steps.back().p * steps.back().p;
    LinialProgram prog(std::move(init), std::move(steps));
    auto colors = run_program(g, prog, log, "linial", cfg.round_cap);
    if (!check_proper(g, colors).empty())
        throw Error("color reduction produced a non-proper coloring");
    return {std::move(colors), count};
}

ColoringResult defective_coloring(const Graph& g, const std::vector<Color>& proper, long long q,
                                  const Rational& alpha, RoundLog& log, long long round_cap) {
    if (alpha.num() <= 0 || alpha > Rational(1)) throw InvalidAlpha("alpha must lie in (0,1]");
    if (g.edge_count() == 0) return {std::vector<Color>(g.node_count(), 0), 1};

    auto steps = defective_schedule(q, alpha);
    std::vector<Color> colors;
    long long count;
    if (steps.empty()) {
        colors = proper;
        count = q;
    } else {
        count = steps.back().p * steps.back().p;
        DefectiveReductionProgram prog(std::vector<long long>(proper.begin(), proper.end()),
                                       std::move(steps));
        colors = run_program(g, prog, log, "defective", round_cap);
    }
    // Hard contract: at most floor(alpha*deg(v)) same-colored neighbors.
    for (NodeId v = 0; v < g.node_count(); ++v) {
        long long same = 0;
        for (NodeId u : g.neighbors(v))
            if (colors[u] == colors[v]) ++same;
        if (static_cast<__int128>(same) * alpha.den() >
            static_cast<__int128>(alpha.num()) * g.degree(v))
            throw Error("defective reduction exceeded its budget at node " + std::to_string(v));
    }
    return {std::move(colors), count};
}

namespace {

struct BaseMsg {
    long long klass;
    Color chosen;
};

// Class-by-class greedy: after the reduction settles, a node whose
// smaller-class neighbors have all announced takes the lowest listed color
// whose announced-neighbor count is within its defect. Neighbors in the same
// class are never adjacent (classes come from a proper coloring).
class BaseArbdefectiveProgram {
public:
    struct State {
        long long color = 0;
        std::size_t step = 0;
        long long update_count = 0;
        Color chosen = kUncolored;
        bool decided = false;
        std::vector<long long> nb_class;
        std::vector<Color> nb_chosen;
    };
    using Msg = BaseMsg;
    struct Output {
        Color color = kUncolored;
        std::vector<int> out_slots;
    };

    BaseArbdefectiveProgram(const Graph& g, const ListInstance& inst, std::vector<long long> init,
                            std::vector<ReductionStep> steps)
        : graph_(g), inst_(inst), init_(std::move(init)), steps_(std::move(steps)) {}

    State init(int v) const {
        State s;
        s.color = init_[v];
        s.nb_class.assign(graph_.degree(v), -1);
        s.nb_chosen.assign(graph_.degree(v), kUncolored);
        if (inst_.lists[v].empty()) s.decided = true;  // isolated node with empty list
        return s;
    }

    bool done(const State& s, int) const { return s.decided; }
    std::optional<Msg> message(const State& s, int) const { return Msg{s.color, s.chosen}; }

    void update(State& s, int v, const std::vector<const Msg*>& inbox) {
        ++s.update_count;
        if (s.decided) return;
        if (s.step < steps_.size()) {
            auto [k, p] = steps_[s.step];
            long long chosen_x = -1;
            for (long long x = 0; x < p && chosen_x < 0; ++x) {
                long long own = poly_eval(s.color, k, p, x);
                bool clash = false;
                for (std::size_t j = 0; j < inbox.size() && !clash; ++j) {
                    if (!inbox[j]) continue;
                    long long c = inbox[j]->klass;
                    if (c != s.color && poly_eval(c, k, p, x) == own) clash = true;
                }
                if (!clash) chosen_x = x;
            }
            if (chosen_x < 0) throw Error("base reduction stuck; input coloring was not proper");
            s.color = chosen_x * p + poly_eval(s.color, k, p, chosen_x);
            ++s.step;
            return;
        }
        for (std::size_t j = 0; j < inbox.size(); ++j) {
            if (!inbox[j]) continue;
            s.nb_class[j] = inbox[j]->klass;
            if (inbox[j]->chosen != kUncolored) s.nb_chosen[j] = inbox[j]->chosen;
        }
        // Final classes reach neighbors one round after the reduction ends.
        if (s.update_count <= static_cast<long long>(steps_.size())) return;
        for (std::size_t j = 0; j < s.nb_class.size(); ++j)
            if (s.nb_class[j] < s.color && s.nb_chosen[j] == kUncolored) return;
        for (const auto& cd : inst_.lists[v]) {
            long long already = 0;
            for (Color c : s.nb_chosen)
                if (c == cd.color) ++already;
            if (already <= cd.defect) {
                s.chosen = cd.color;
                s.decided = true;
                return;
            }
        }
        throw SlackTooSmall("no pickable color at node turn; instance slack below 1");
    }

    Output output(const State& s, int) const {
        Output out;
        out.color = s.chosen;
        if (s.chosen != kUncolored)
            for (std::size_t j = 0; j < s.nb_chosen.size(); ++j)
                if (s.nb_chosen[j] == s.chosen) out.out_slots.push_back(static_cast<int>(j));
        return out;
    }

private:
    const Graph& graph_;
    const ListInstance& inst_;
    std::vector<long long> init_;
    std::vector<ReductionStep> steps_;
};

}  // namespace

Solution base_arbdefective(const Graph& g, const ListInstance& inst, const std::vector<Color>& proper,
                           long long q, RoundLog& log, long long round_cap) {
    if (!slack_satisfied(g, inst, Rational(1)))
        throw SlackTooSmall("base arbdefective solver needs slack >= 1");
    std::vector<long long> init(proper.begin(), proper.end());
    std::vector<ReductionStep> steps;
    if (g.edge_count() == 0) {
        init.assign(g.node_count(), 0);  // classes are irrelevant without edges
    } else {
        steps = linial_schedule(q, g.max_degree());
    }
    BaseArbdefectiveProgram prog(g, inst, std::move(init), std::move(steps));
    auto outputs = run_program(g, prog, log, "base", round_cap);

    Solution sol;
    sol.colors.assign(g.node_count(), kUncolored);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        sol.colors[v] = outputs[v].color;
        for (int slot : outputs[v].out_slots)
            sol.orientation.emplace_back(v, g.neighbors(v)[slot]);
    }
    return sol;
}

}  // namespace dcolor
