#include "dcolor/instance.hpp"

#include <algorithm>
#include <map>

namespace dcolor {

std::string mode_name(Mode m) {
    return m == Mode::Defective ? "defective" : "arbdefective";
}

Mode mode_from_name(const std::string& s) {
    if (s == "defective") return Mode::Defective;
    if (s == "arbdefective") return Mode::Arbdefective;
    throw InvalidInput("unknown mode: " + s);
}

long long ListInstance::weight(NodeId v) const {
    long long sum = 0;
    for (const auto& cd : lists[v]) sum += cd.defect + 1;
    return sum;
}

std::optional<long long> ListInstance::defect_of(NodeId v, Color x) const {
    const auto& l = lists[v];
    auto it = std::lower_bound(l.begin(), l.end(), x,
                               [](const ColorDefect& cd, Color c) { return cd.color < c; });
    if (it == l.end() || it->color != x) return std::nullopt;
    return it->defect;
}

void ListInstance::normalize() {
    for (auto& l : lists) {
        std::sort(l.begin(), l.end(),
                  [](const ColorDefect& a, const ColorDefect& b) { return a.color < b.color; });
        for (std::size_t i = 1; i < l.size(); ++i)
            if (l[i].color == l[i - 1].color) throw InvalidInput("duplicate color in list");
    }
}

void ListInstance::validate(const Graph& g) const {
    if (node_count() != g.node_count()) throw InvalidInput("instance/graph node count mismatch");
    if (color_space < 1) throw InvalidInput("color space must have size >= 1");
    for (NodeId v = 0; v < node_count(); ++v) {
        const auto& l = lists[v];
        if (l.empty() && g.degree(v) > 0)
            throw InvalidInput("empty list at non-isolated node " + std::to_string(v));
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (l[i].color < 0 || l[i].color >= color_space)
                throw InvalidInput("listed color outside color space");
            if (l[i].defect < 0) throw InvalidInput("negative defect");
            if (i > 0 && l[i].color <= l[i - 1].color)
                throw InvalidInput("list not sorted by color");
        }
    }
}

int Solution::colored_count() const {
    int c = 0;
    for (Color x : colors)
        if (x != kUncolored) ++c;
    return c;
}

SlackReport slack_check(const Graph& g, const ListInstance& inst, const Rational& s) {
    SlackReport report;
    report.ratio.resize(g.node_count());
    report.satisfied = true;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        long long deg = g.degree(v);
        if (deg == 0) {
            report.ratio[v] = std::nullopt;
            continue;
        }
        long long w = inst.weight(v);
        Rational r(w, deg);
        report.ratio[v] = r;
        if (!report.global_min || r < *report.global_min) report.global_min = r;
        if (!s.strictly_below(w, deg)) report.satisfied = false;
    }
    return report;
}

bool slack_satisfied(const Graph& g, const ListInstance& inst, const Rational& s) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        long long deg = g.degree(v);
        if (deg == 0) continue;
        if (!s.strictly_below(inst.weight(v), deg)) return false;
    }
    return true;
}

namespace {

void check_listed_colors(const Graph& g, const ListInstance& inst, const Solution& sol,
                         std::vector<Violation>& out) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        Color x = sol.colors[v];
        if (x == kUncolored) continue;
        if (!inst.defect_of(v, x)) out.push_back({ViolationKind::ColorOutsideList, v, -1});
    }
}

}  // namespace

std::vector<Violation> verify_defective(const Graph& g, const ListInstance& inst, const Solution& sol) {
    std::vector<Violation> out;
    check_listed_colors(g, inst, sol, out);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        Color x = sol.colors[v];
        if (x == kUncolored) continue;
        auto d = inst.defect_of(v, x);
        if (!d) continue;  // already reported
        long long same = 0;
        for (NodeId u : g.neighbors(v))
            if (sol.colors[u] == x) ++same;
        if (same > *d) out.push_back({ViolationKind::DefectExceeded, v, -1});
    }
    return out;
}

std::vector<Violation> verify_arbdefective(const Graph& g, const ListInstance& inst, const Solution& sol) {
    std::vector<Violation> out;
    check_listed_colors(g, inst, sol, out);

    std::map<std::pair<NodeId, NodeId>, int> dir;  // canonical edge -> +1 (u->v), -1 (v->u), 2 (both)
    for (auto [u, v] : sol.orientation) {
        if (u < 0 || v < 0 || u >= g.node_count() || v >= g.node_count() || !g.has_edge(u, v)) {
            out.push_back({ViolationKind::SpuriousOrientation, u, v});
            continue;
        }
        bool mono = sol.colors[u] != kUncolored && sol.colors[u] == sol.colors[v];
        if (!mono) {
            out.push_back({ViolationKind::SpuriousOrientation, u, v});
            continue;
        }
        auto key = std::minmax(u, v);
        int want = (u < v) ? 1 : -1;
        auto [it, inserted] = dir.emplace(std::make_pair(key.first, key.second), want);
        if (!inserted && it->second != want && it->second != 2) {
            it->second = 2;
            out.push_back({ViolationKind::DoublyOrientedEdge, key.first, key.second});
        }
    }

    std::vector<long long> out_same(g.node_count(), 0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        Color x = sol.colors[u];
        if (x == kUncolored) continue;
        for (NodeId v : g.neighbors(u)) {
            if (u > v || sol.colors[v] != x) continue;
            auto it = dir.find({u, v});
            if (it == dir.end()) {
                out.push_back({ViolationKind::UnorientedMonochromaticEdge, u, v});
            } else if (it->second == 1) {
                ++out_same[u];
            } else if (it->second == -1) {
                ++out_same[v];
            }
        }
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        Color x = sol.colors[v];
        if (x == kUncolored) continue;
        auto d = inst.defect_of(v, x);
        if (d && out_same[v] > *d) out.push_back({ViolationKind::OutDefectExceeded, v, -1});
    }
    return out;
}

ListInstance restrict_instance(const Graph& g, const ListInstance& inst,
                               const std::vector<NodeId>& subset,
                               const std::vector<Color>& context) {
    for (NodeId v : subset)
        if (context[v] != kUncolored)
            throw InvalidInput("restriction subset overlaps colored context");
    ListInstance out;
    out.mode = inst.mode;
    out.color_space = inst.color_space;
    out.lists.assign(inst.node_count(), {});
    for (NodeId v : subset) {
        std::vector<ColorDefect> kept;
        for (const auto& cd : inst.lists[v]) {
            long long alpha = 0;
            for (NodeId u : g.neighbors(v))
                if (context[u] == cd.color) ++alpha;
            if (alpha <= cd.defect) kept.push_back({cd.color, cd.defect - alpha});
        }
        out.lists[v] = std::move(kept);
    }
    return out;
}

}  // namespace dcolor
