#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ijdom/chords.hpp"
#include "ijdom/difftest.hpp"
#include "ijdom/domination.hpp"
#include "ijdom/errors.hpp"
#include "ijdom/generators.hpp"
#include "ijdom/interval_graph.hpp"

using namespace ijdom;

TEST_CASE("from_intervals renumbers by right endpoint and connects overlaps") {
    IntervalGraph g = from_intervals({{1, 3}, {2, 5}, {4, 6}});
    REQUIRE(g.order() == 3);
    CHECK(g.graph.adjacent(1, 2));
    CHECK(g.graph.adjacent(2, 3));
    CHECK_FALSE(g.graph.adjacent(1, 3));
}

TEST_CASE("from_intervals trivia") {
    CHECK(from_intervals({{0, 1}}).graph.edge_count() == 0);
    IntervalGraph g = from_intervals({{0, 1}, {2, 3}});
    CHECK(g.graph.edge_count() == 0);
    CHECK_THROWS_AS(from_intervals({{0, 1}, {5, 5}}), InputError);
    CHECK_THROWS_AS(from_intervals({}), InputError);
}

TEST_CASE("touching endpoints are adjacent") {
    IntervalGraph g = from_intervals({{0, 1}, {1, 2}});
    CHECK(g.graph.adjacent(1, 2));
}

TEST_CASE("right-endpoint ties broken by left endpoint then input order") {
    IntervalGraph g = from_intervals({{3, 5}, {1, 5}, {3, 5}});
    const IntervalSet& s = *g.source;
    CHECK(s[0].left == 1.0);   // smaller left first
    CHECK(s[1].left == 3.0);
    CHECK(s[2].left == 3.0);
}

TEST_CASE("verify_numbering") {
    CHECK(verify_numbering(from_intervals({{1, 3}, {2, 5}, {4, 6}}).graph));
    Graph bad(3, {{1, 3}});
    CHECK_FALSE(verify_numbering(bad));
    Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(verify_numbering(k4));
}

TEST_CASE("from_ordered_edges rejects a broken ordering") {
    CHECK_THROWS_AS(from_ordered_edges(3, {{1, 3}}), StructureError);
    IntervalGraph g = from_ordered_edges(3, {{1, 2}, {2, 3}});
    CHECK(g.order() == 3);
}

TEST_CASE("index on the 3-path") {
    IntervalGraph g = from_intervals({{1, 3}, {2, 5}, {4, 6}});
    NeighborhoodIndex idx = build_index(g);
    CHECK(idx.low(1) == 1);
    CHECK(idx.low(2) == 1);
    CHECK(idx.low(3) == 2);
    CHECK(idx.maxlow(1) == 1);
    CHECK(idx.maxlow(2) == 1);
    CHECK(idx.maxlow(3) == 2);
    CHECK(idx.low_range(1, 3) == 1);
    CHECK(idx.low_range(3, 3) == 2);
    CHECK(idx.low_range(3, 2) == idx.inf());
}

TEST_CASE("index trivia: isolated vertex and complete graph") {
    NeighborhoodIndex isol = build_index(from_intervals({{0, 1}, {2, 3}, {4, 5}}));
    for (int i = 1; i <= 3; ++i) {
        CHECK(isol.low(i) == i);
        CHECK(isol.maxlow(i) == i);
    }
    NeighborhoodIndex comp = build_index(from_intervals({{0, 10}, {1, 11}, {2, 12}, {3, 13}}));
    for (int i = 1; i <= 4; ++i) {
        CHECK(comp.low(i) == 1);
        CHECK(comp.maxlow(i) == 1);
    }
}

TEST_CASE("is_1j_dominating") {
    IntervalGraph p4 = from_intervals({{0, 2}, {1, 4}, {3, 6}, {5, 7}});
    CHECK(is_1j_dominating(p4.graph, {2, 3}, 2).valid);

    Graph star(4, {{4, 1}, {4, 2}, {4, 3}});
    auto cert = is_1j_dominating(star, {1, 2, 3}, 2);
    CHECK_FALSE(cert.valid);
    REQUIRE(cert.violations.size() == 1);
    CHECK(cert.violations[0] == std::pair<int, int>{4, 3});

    CHECK(is_1j_dominating(star, {1, 2, 3, 4}, 1).valid);  // whole vertex set
    CHECK_THROWS_AS(is_1j_dominating(star, {9}, 2), InputError);
}

TEST_CASE("chords_to_graph small cases") {
    ChordDiagram crossing{{{"a", 0, 2}, {"b", 1, 3}}};
    CHECK(chords_to_graph(crossing).edge_count() == 1);
    ChordDiagram disjoint{{{"a", 0, 1}, {"b", 2, 3}}};
    CHECK(chords_to_graph(disjoint).edge_count() == 0);
    ChordDiagram nested{{{"a", 0, 3}, {"b", 1, 2}}};
    CHECK(chords_to_graph(nested).edge_count() == 0);
    ChordDiagram dup{{{"a", 0, 2}, {"b", 2, 3}}};
    CHECK_THROWS_AS(chords_to_graph(dup), InputError);
}

TEST_CASE("induced_prefix keeps the ordering and the sources") {
    IntervalGraph g = from_intervals({{1, 3}, {2, 5}, {4, 6}});
    IntervalGraph h = induced_prefix(g, 2);
    CHECK(h.order() == 2);
    CHECK(h.graph.adjacent(1, 2));
    CHECK(verify_numbering(h.graph));
    IntervalGraph same = induced_prefix(g, 3);
    CHECK(same.graph.edge_count() == g.graph.edge_count());
    CHECK(induced_prefix(g, 1).order() == 1);
    CHECK_THROWS_AS(induced_prefix(g, 4), InputError);
}

TEST_CASE("every generated interval graph passes verify_numbering") {
    for (uint64_t seed = 1; seed <= 300; ++seed) {
        GenSpec spec;
        spec.n = 1 + static_cast<int>(seed % 20);
        spec.seed = seed;
        IntervalSet s = gen_intervals(spec);
        std::vector<std::pair<double, double>> raw;
        for (const auto& iv : s) raw.emplace_back(iv.left, iv.right);
        CHECK(verify_numbering(from_intervals(raw).graph));
    }
}

TEST_CASE("clique and escape-vertex structure of the maxlow window") {
    for (uint64_t seed = 1; seed <= 120; ++seed) {
        GenSpec spec;
        spec.n = 2 + static_cast<int>(seed % 12);
        spec.seed = seed ^ 0xabcdu;
        IntervalSet s = gen_intervals(spec);
        std::vector<std::pair<double, double>> raw;
        for (const auto& iv : s) raw.emplace_back(iv.left, iv.right);
        IntervalGraph g = from_intervals(raw);
        NeighborhoodIndex idx = build_index(g);
        for (int i = 1; i <= g.order(); ++i) {
            int ml = idx.maxlow(i);
            for (int u = ml; u <= i; ++u)
                for (int v = u + 1; v <= i; ++v) CHECK(g.graph.adjacent(u, v));
            bool escape = false;
            for (int k = ml; k <= i && !escape; ++k) {
                bool none_below = true;
                for (int l = 1; l < ml && none_below; ++l)
                    if (g.graph.adjacent(k, l)) none_below = false;
                escape = none_below;
            }
            CHECK(escape);
        }
    }
}

TEST_CASE("lowRange table equals the naive minimum") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        GenSpec spec;
        spec.n = 1 + static_cast<int>(seed % 14);
        spec.seed = seed ^ 0x77u;
        IntervalSet s = gen_intervals(spec);
        std::vector<std::pair<double, double>> raw;
        for (const auto& iv : s) raw.emplace_back(iv.left, iv.right);
        IntervalGraph g = from_intervals(raw);
        NeighborhoodIndex idx = build_index(g);
        for (int a = 1; a <= g.order(); ++a)
            for (int b = a; b <= g.order(); ++b) {
                int naive = idx.inf();
                for (int k = a; k <= b; ++k) naive = std::min(naive, idx.low(k));
                CHECK(idx.low_range(a, b) == naive);
            }
    }
}

TEST_CASE("crossing relation equals overlap-without-containment on random diagrams") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.below(12));
        std::vector<int> perm(static_cast<size_t>(2 * n));
        for (int i = 0; i < 2 * n; ++i) perm[static_cast<size_t>(i)] = i;
        for (int i = 2 * n - 1; i > 0; --i)
            std::swap(perm[static_cast<size_t>(i)],
                      perm[static_cast<size_t>(rng.below(static_cast<uint64_t>(i + 1)))]);
        ChordDiagram d;
        for (int i = 0; i < n; ++i)
            d.chords.push_back(Chord{"x" + std::to_string(i), perm[static_cast<size_t>(2 * i)],
                                     perm[static_cast<size_t>(2 * i + 1)]});
        CHECK_NOTHROW(chords_to_graph(d));  // derivation agreement is asserted inside
    }
}

TEST_CASE("low profiles reproduce their graphs") {
    IntervalGraph g = graph_from_low_profile({1, 1, 2});
    NeighborhoodIndex idx = build_index(g);
    CHECK(idx.low(1) == 1);
    CHECK(idx.low(2) == 1);
    CHECK(idx.low(3) == 2);
    CHECK(g.graph.adjacent(1, 2));
    CHECK(g.graph.adjacent(2, 3));
    CHECK_FALSE(g.graph.adjacent(1, 3));
}
