#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcolor/graph.hpp"
#include "dcolor/rational.hpp"

namespace dcolor {

enum class Mode { Defective, Arbdefective };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& s);

/// One allowed color with its defect budget.
struct ColorDefect {
    Color color = 0;
    long long defect = 0;
};

/// List (arb)defective coloring instance over a color space {0..C-1}.
/// Per-node lists are kept sorted by color id. Empty lists are only valid
/// for isolated nodes.
struct ListInstance {
    Mode mode = Mode::Arbdefective;
    long long color_space = 1;                   // C
    std::vector<std::vector<ColorDefect>> lists; // one entry per node

    int node_count() const { return static_cast<int>(lists.size()); }

    /// Sum of (defect+1) over the node's list; the quantity slack compares
    /// against S*deg(v).
    long long weight(NodeId v) const;

    /// Defect for a color in the node's list, or nullopt if not listed.
    std::optional<long long> defect_of(NodeId v, Color x) const;

    void validate(const Graph& g) const;
    void normalize();  // sort each list by color, reject duplicates
};

/// Coloring of a node subset plus (for arbdefective instances) an
/// orientation of the monochromatic edges among colored nodes.
struct Solution {
    std::vector<Color> colors;                            // kUncolored for unassigned
    std::vector<std::pair<NodeId, NodeId>> orientation;   // ordered pairs u->v

    int colored_count() const;
};

struct SlackReport {
    // Per node: nullopt = isolated (ratio +inf). Otherwise weight/deg as a rational.
    std::vector<std::optional<Rational>> ratio;
    std::optional<Rational> global_min;  // min over non-isolated nodes, nullopt if all isolated
    bool satisfied = false;
};

/// True iff weight(v) > S*deg(v) strictly at every node; isolated nodes
/// always satisfy.
SlackReport slack_check(const Graph& g, const ListInstance& inst, const Rational& s);
bool slack_satisfied(const Graph& g, const ListInstance& inst, const Rational& s);

enum class ViolationKind {
    ColorOutsideList,
    DefectExceeded,
    OutDefectExceeded,
    UnorientedMonochromaticEdge,
    DoublyOrientedEdge,
    SpuriousOrientation,
};

struct Violation {
    ViolationKind kind;
    NodeId u = -1;
    NodeId v = -1;  // -1 for node-level violations
};

/// Defective-mode verification: flags nodes colored outside their list and
/// nodes whose same-colored-neighbor count exceeds their defect.
std::vector<Violation> verify_defective(const Graph& g, const ListInstance& inst, const Solution& sol);

/// Arbdefective-mode verification: same-colored OUT-neighbor counts against
/// defects, plus orientation coverage of the monochromatic edges.
std::vector<Violation> verify_arbdefective(const Graph& g, const ListInstance& inst, const Solution& sol);

/// For each node of `subset`, keep colors x with alpha_v(x) <= d_v(x) and
/// shrink the defect by alpha_v(x), where alpha_v(x) counts neighbors outside
/// the subset colored x in `context`. Nodes outside the subset get empty lists.
ListInstance restrict_instance(const Graph& g, const ListInstance& inst,
                               const std::vector<NodeId>& subset,
                               const std::vector<Color>& context);

}  // namespace dcolor
