#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "dcolor/generators.hpp"
#include "dcolor/instance.hpp"
#include "dcolor/io.hpp"

using namespace dcolor;

namespace {

Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

ListInstance uniform_instance(const Graph& g, Mode mode, std::vector<Color> colors,
                              long long defect, long long space) {
    ListInstance inst;
    inst.mode = mode;
    inst.color_space = space;
    inst.lists.assign(g.node_count(), {});
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (Color c : colors) inst.lists[v].push_back({c, defect});
    return inst;
}

}  // namespace

TEST_CASE("slack boundary is strict") {
    // degree-3 node with four defect-0 colors: weight 4 > 3, slack 1 holds,
    // slack 4/3 fails because 4 > (4/3)*3 is not strict.
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    ListInstance inst = uniform_instance(star, Mode::Defective, {0, 1, 2, 3}, 0, 4);
    CHECK(slack_satisfied(star, inst, Rational(1)));
    CHECK(!slack_satisfied(star, inst, Rational(4, 3)));

    auto report = slack_check(star, inst, Rational(1));
    REQUIRE(report.ratio[0].has_value());
    CHECK(*report.ratio[0] == Rational(4, 3));
    CHECK(report.global_min.has_value());
}

TEST_CASE("slack with defects on a degree-2 node") {
    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    ListInstance inst;
    inst.mode = Mode::Defective;
    inst.color_space = 2;
    inst.lists.assign(3, {{ColorDefect{0, 1}, ColorDefect{1, 1}}});
    // node 1 has degree 2 and weight 4: slack 2 requires 4 > 4, fails.
    CHECK(!slack_satisfied(path, inst, Rational(2)));
    CHECK(slack_satisfied(path, inst, Rational(3, 2)));
}

TEST_CASE("isolated node with empty list satisfies any slack") {
    Graph g = Graph::from_edges(2, {});
    ListInstance inst;
    inst.mode = Mode::Defective;
    inst.color_space = 3;
    inst.lists.assign(2, {});
    CHECK(slack_satisfied(g, inst, Rational(1000)));
    auto report = slack_check(g, inst, Rational(5));
    CHECK(!report.ratio[0].has_value());
    CHECK(!report.global_min.has_value());
    CHECK(report.satisfied);
}

TEST_CASE("verify_defective on the all-5 triangle") {
    Graph g = triangle();
    ListInstance inst = uniform_instance(g, Mode::Defective, {5}, 2, 6);
    Solution sol;
    sol.colors = {5, 5, 5};
    CHECK(verify_defective(g, inst, sol).empty());

    inst.lists[1][0].defect = 1;
    auto bad = verify_defective(g, inst, sol);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == ViolationKind::DefectExceeded);
    CHECK(bad[0].u == 1);
}

TEST_CASE("verify_defective flags colors outside the list") {
    Graph g = triangle();
    ListInstance inst = uniform_instance(g, Mode::Defective, {0, 1, 2}, 0, 4);
    Solution sol;
    sol.colors = {0, 1, 3};
    auto bad = verify_defective(g, inst, sol);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == ViolationKind::ColorOutsideList);
    CHECK(bad[0].u == 2);
}

TEST_CASE("verify_arbdefective orientation direction matters") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    ListInstance inst;
    inst.mode = Mode::Arbdefective;
    inst.color_space = 4;
    inst.lists = {{{3, 1}}, {{3, 0}}};
    Solution sol;
    sol.colors = {3, 3};
    sol.orientation = {{0, 1}};  // u has budget 1: fine
    CHECK(verify_arbdefective(g, inst, sol).empty());

    sol.orientation = {{1, 0}};  // v has budget 0: violation at v
    auto bad = verify_arbdefective(g, inst, sol);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == ViolationKind::OutDefectExceeded);
    CHECK(bad[0].u == 1);
}

TEST_CASE("verify_arbdefective flags unoriented and doubly oriented edges") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    ListInstance inst = uniform_instance(g, Mode::Arbdefective, {7}, 5, 8);
    Solution sol;
    sol.colors = {7, 7};
    auto bad = verify_arbdefective(g, inst, sol);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == ViolationKind::UnorientedMonochromaticEdge);

    sol.orientation = {{0, 1}, {1, 0}};
    bad = verify_arbdefective(g, inst, sol);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == ViolationKind::DoublyOrientedEdge);

    sol.colors = {7, kUncolored};
    sol.orientation = {{0, 1}};
    bad = verify_arbdefective(g, inst, sol);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == ViolationKind::SpuriousOrientation);
}

TEST_CASE("defective-valid solutions pass arbdefective with any orientation") {
    std::mt19937_64 rng(11);
    int accepted = 0;
    for (int trial = 0; trial < 300 && accepted < 100; ++trial) {
        Graph g = gen_random_graph(10, 16, 6, rng());
        ListInstance inst = gen_instance(g, 6, Rational(2), Mode::Defective, rng());
        Solution sol;
        sol.colors.assign(g.node_count(), kUncolored);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const auto& lst = inst.lists[v];
            auto best = std::max_element(lst.begin(), lst.end(),
                                         [](const ColorDefect& a, const ColorDefect& b) {
                                             return a.defect < b.defect;
                                         });
            sol.colors[v] = best->color;
        }
        if (!verify_defective(g, inst, sol).empty()) continue;
        ++accepted;

        ListInstance arb = inst;
        arb.mode = Mode::Arbdefective;
        Solution oriented = sol;
        for (auto [u, v] : g.edges())
            if (sol.colors[u] == sol.colors[v]) {
                bool flip = rng() & 1;
                oriented.orientation.emplace_back(flip ? v : u, flip ? u : v);
            }
        CHECK(verify_arbdefective(g, arb, oriented).empty());
    }
    CHECK(accepted == 100);
}

TEST_CASE("restrict_instance follows the colored context") {
    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    ListInstance inst;
    inst.mode = Mode::Arbdefective;
    inst.color_space = 3;
    inst.lists.assign(3, {{ColorDefect{0, 2}, ColorDefect{1, 1}, ColorDefect{2, 0}}});

    std::vector<Color> context(3, kUncolored);
    SUBCASE("no colored neighbors: identity") {
        auto out = restrict_instance(path, inst, {1}, context);
        CHECK(out.lists[1].size() == 3);
        CHECK(out.lists[1][0].defect == 2);
        CHECK(out.lists[0].empty());  // outside subset
    }
    SUBCASE("defect reduced by colored-neighbor count") {
        context[0] = 0;
        context[2] = 0;
        auto out = restrict_instance(path, inst, {1}, context);
        REQUIRE(out.lists[1].size() == 3);
        CHECK(out.lists[1][0].defect == 0);  // d=2, two neighbors colored 0
    }
    SUBCASE("color dropped when context exceeds defect") {
        context[0] = 1;
        context[2] = 1;
        auto out = restrict_instance(path, inst, {1}, context);
        REQUIRE(out.lists[1].size() == 2);  // color 1 (d=1) dropped
        CHECK(out.lists[1][0].color == 0);
        CHECK(out.lists[1][1].color == 2);
    }
    SUBCASE("subset overlapping context is rejected") {
        context[1] = 2;
        CHECK_THROWS_AS(restrict_instance(path, inst, {1}, context), InvalidInput);
    }
}

TEST_CASE("restriction never increases defects or adds colors") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = gen_random_graph(12, 20, 6, rng());
        ListInstance inst = gen_instance(g, 5, Rational(2), Mode::Arbdefective, rng());
        std::vector<Color> context(g.node_count(), kUncolored);
        std::vector<NodeId> subset;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (rng() & 1) {
                subset.push_back(v);
            } else if (!inst.lists[v].empty()) {
                context[v] = inst.lists[v][rng() % inst.lists[v].size()].color;
            }
        }
        auto out = restrict_instance(g, inst, subset, context);
        for (NodeId v : subset) {
            for (const auto& cd : out.lists[v]) {
                auto orig = inst.defect_of(v, cd.color);
                REQUIRE(orig.has_value());
                CHECK(cd.defect <= *orig);
            }
            CHECK(out.lists[v].size() <= inst.lists[v].size());
        }
    }
}

TEST_CASE("slack 0 holds whenever non-isolated nodes have nonempty lists") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = gen_random_graph(10, 14, 5, rng());
        ListInstance inst = gen_instance(g, 4, Rational(1), Mode::Defective, rng());
        CHECK(slack_satisfied(g, inst, Rational(0)));
    }
}

TEST_CASE("composition: restricted solution plus earlier-oriented edges verifies") {
    // Color a subset greedily, then finish through restrict_instance; orienting
    // monochromatic edges later->earlier must give a verifier-clean solution.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = gen_random_graph(10, 15, 5, rng());
        ListInstance inst = gen_instance(g, 5, Rational(2), Mode::Arbdefective, rng());

        std::vector<Color> context(g.node_count(), kUncolored);
        std::vector<NodeId> rest;
        std::vector<std::pair<NodeId, NodeId>> orientation;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (v % 2 == 0 && !inst.lists[v].empty()) {
                for (const auto& cd : inst.lists[v]) {
                    long long cnt = 0;
                    for (NodeId u : g.neighbors(v))
                        if (context[u] == cd.color) ++cnt;
                    if (cnt <= cd.defect) {
                        context[v] = cd.color;
                        for (NodeId u : g.neighbors(v))
                            if (context[u] == cd.color) orientation.emplace_back(v, u);
                        break;
                    }
                }
                REQUIRE(context[v] != kUncolored);
            } else {
                rest.push_back(v);
            }
        }
        ListInstance restricted = restrict_instance(g, inst, rest, context);
        Solution combined;
        combined.colors = context;
        combined.orientation = orientation;
        for (NodeId v : rest) {
            if (restricted.lists[v].empty()) {
                REQUIRE(g.degree(v) == 0);
                continue;
            }
            // greedy within the restriction, orienting toward earlier nodes
            Color chosen = kUncolored;
            for (const auto& cd : restricted.lists[v]) {
                long long cnt = 0;
                for (NodeId u : g.neighbors(v))
                    if (combined.colors[u] == cd.color && context[u] == kUncolored) ++cnt;
                if (cnt <= cd.defect) {
                    chosen = cd.color;
                    break;
                }
            }
            REQUIRE(chosen != kUncolored);
            combined.colors[v] = chosen;
            for (NodeId u : g.neighbors(v))
                if (combined.colors[u] == chosen) combined.orientation.emplace_back(v, u);
        }
        CHECK(verify_arbdefective(g, inst, combined).empty());
    }
}

TEST_CASE("instance JSON round trip") {
    Graph g = gen_random_graph(8, 12, 5, 77);
    ListInstance inst = gen_instance(g, 6, Rational(3, 2), Mode::Arbdefective, 99);
    auto j = instance_to_json(inst);
    ListInstance back = instance_from_json(j, g.node_count());
    CHECK(back.mode == inst.mode);
    CHECK(back.color_space == inst.color_space);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        REQUIRE(back.lists[v].size() == inst.lists[v].size());
        for (std::size_t i = 0; i < inst.lists[v].size(); ++i) {
            CHECK(back.lists[v][i].color == inst.lists[v][i].color);
            CHECK(back.lists[v][i].defect == inst.lists[v][i].defect);
        }
    }

    Solution sol;
    sol.colors.assign(g.node_count(), kUncolored);
    sol.colors[0] = 3;
    sol.orientation = {{0, 1}};
    Solution sback = solution_from_json(solution_to_json(sol), g.node_count());
    CHECK(sback.colors == sol.colors);
    CHECK(sback.orientation == sol.orientation);
}
