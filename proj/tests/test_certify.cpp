#include <doctest.h>

#include <random>

#include "extcover/certify.hpp"
#include "support.hpp"

using namespace extcover;
using namespace testsupport;

TEST_CASE("minimal vertex cover check") {
    Graph p3 = path(3);
    CHECK(is_minimal_vertex_cover(p3, vs(3, {1})));
    CHECK_FALSE(is_minimal_vertex_cover(p3, vs(3, {0, 1})));  // 0 has no private edge
    CHECK_FALSE(is_minimal_vertex_cover(p3, vs(3, {0})));     // edge 1-2 uncovered

    Graph s5 = star(5);
    CHECK(is_minimal_vertex_cover(s5, vs(6, {1, 2, 3, 4, 5})));
    CHECK(is_minimal_vertex_cover(s5, vs(6, {0})));
}

TEST_CASE("maximal independent set check") {
    CHECK(is_maximal_independent_set(complete(2), vs(2, {0})));
    CHECK_FALSE(is_maximal_independent_set(path(3), vs(3, {0})));
    CHECK(is_maximal_independent_set(cycle(4), vs(4, {0, 2})));
    CHECK_FALSE(is_maximal_independent_set(cycle(4), vs(4, {0, 1})));
}

TEST_CASE("duality: minimal covers are complements of maximal independent sets") {
    long long checked = 0;
    for (int n = 1; n <= 6; ++n) {
        auto pairs = vertex_pairs(n);
        for (uint32_t gm = 0; gm < (1u << pairs.size()); ++gm) {
            Graph g = graph_from_edge_mask(n, pairs, gm);
            bool all = true;
            for (uint32_t sm = 0; sm < (1u << n); ++sm) {
                VertexSet s = from_mask(n, sm);
                all &= is_minimal_vertex_cover(g, s) ==
                       is_maximal_independent_set(g, s.complement());
                ++checked;
            }
            REQUIRE(all);
        }
    }
    CHECK(checked == 1 * 2 + 2 * 4 + 8 * 8 + 64 * 16 + 1024 * 32 + 32768LL * 64);
}

TEST_CASE("independent dominating within a region") {
    Graph p3 = path(3);
    CHECK(is_independent_dominating_within(p3, VertexSet::full(3), vs(3, {1})));
    CHECK_FALSE(is_independent_dominating_within(p3, VertexSet::full(3), vs(3, {0})));

    Graph p4 = path(4);
    CHECK(is_independent_dominating_within(p4, VertexSet::full(4), vs(4, {1, 3})));
    CHECK_THROWS_AS(is_independent_dominating_within(p4, vs(4, {0, 1}), vs(4, {2})),
                    std::invalid_argument);

    // region-restricted: dominate only within the induced region
    Graph p5 = path(5);
    CHECK(is_independent_dominating_within(p5, vs(5, {0, 1, 2}), vs(5, {1})));
    CHECK_FALSE(is_independent_dominating_within(p5, vs(5, {0, 1, 3}), vs(5, {1})));
}

TEST_CASE("h-free check") {
    Pattern k3 = Pattern::k3();
    Graph k4 = complete(4);
    CHECK(is_h_free(k4, k3, vs(4, {0, 1})));
    CHECK_FALSE(is_h_free(k4, k3, vs(4, {0, 1, 2})));
    Pattern k2 = Pattern::k2();
    Graph c5 = cycle(5);
    CHECK(is_h_free(c5, k2, vs(5, {0, 2})));       // independent set
    CHECK_FALSE(is_h_free(c5, k2, vs(5, {0, 1})));
}

TEST_CASE("minimal h-cover check") {
    Pattern k3 = Pattern::k3();
    // K4: {0,1} leaves private triangles {0,2,3} and {1,2,3}
    CHECK(is_minimal_h_cover(complete(4), k3, vs(4, {0, 1})));
    // K3: no private copy for either cover vertex
    CHECK_FALSE(is_minimal_h_cover(complete(3), k3, vs(3, {0, 1})));
    CHECK(is_minimal_h_cover(complete(3), k3, vs(3, {0})));
}

TEST_CASE("k2-cover coincides with vertex cover, exhaustive n<=5") {
    Pattern k2 = Pattern::k2();
    for (int n = 2; n <= 5; ++n) {
        auto pairs = vertex_pairs(n);
        for (uint32_t gm = 0; gm < (1u << pairs.size()); gm += (n == 5 ? 3 : 1)) {
            Graph g = graph_from_edge_mask(n, pairs, gm);
            for (uint32_t sm = 0; sm < (1u << n); ++sm) {
                VertexSet s = from_mask(n, sm);
                CHECK(is_minimal_h_cover(g, k2, s) == is_minimal_vertex_cover(g, s));
            }
        }
    }
}

TEST_CASE("h-cover duality with maximal h-free complements") {
    std::mt19937 rng(5);
    std::vector<Pattern> patterns = {Pattern::k2(), Pattern::k3(), Pattern::p3()};
    for (int round = 0; round < 40; ++round) {
        Graph g = gnp(6, 0.45, rng);
        for (const auto& h : patterns) {
            for (uint32_t sm = 0; sm < (1u << 6); ++sm) {
                VertexSet s = from_mask(6, sm);
                VertexSet rest = s.complement();
                bool hfree = is_h_free(g, h, rest);
                bool maximal = hfree;
                if (hfree) {
                    s.for_each([&](int v) {
                        VertexSet grown = rest;
                        grown.add(v);
                        if (is_h_free(g, h, grown)) maximal = false;
                    });
                }
                CHECK(is_minimal_h_cover(g, h, s) == maximal);
            }
        }
    }
}
