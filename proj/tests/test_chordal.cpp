#include <doctest.h>

#include <random>
#include <sstream>

#include "extcover/chordal_solver.hpp"
#include "extcover/tree.hpp"
#include "support.hpp"

using namespace extcover;
using namespace testsupport;

namespace {

std::vector<long long> random_binary_weights(int n, std::mt19937& rng) {
    std::vector<long long> w(n);
    for (auto& x : w) x = std::uniform_int_distribution<int>(0, 1)(rng);
    return w;
}

}  // namespace

TEST_CASE("wmisds on fixed graphs") {
    auto peo = [](const Graph& g) { return *chordal_peo(g); };

    WeightedGraph k3{complete(3), {1, 0, 0}};
    auto r = wmisds_chordal(k3, peo(k3.graph));
    CHECK(r.value == 0);
    CHECK(is_maximal_independent_set(k3.graph, r.solution));

    WeightedGraph p3{path(3), {0, 1, 0}};
    auto r2 = wmisds_chordal(p3, peo(p3.graph));
    CHECK(r2.value == 0);
    CHECK(r2.solution == vs(3, {0, 2}));

    // invalid orderings are rejected
    WeightedGraph p4{path(4), {0, 0, 0, 0}};
    CHECK_THROWS_AS(wmisds_chordal(p4, {1, 0, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(wmisds_chordal(WeightedGraph{path(2), {0, -1}}, {0, 1}),
                    std::invalid_argument);
}

TEST_CASE("wmisds equals the oracle on interval and tree corpora") {
    std::mt19937 rng(81);
    for (uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_interval_graph(4 + seed % 9, seed);
        auto peo = chordal_peo(g);
        REQUIRE(peo.has_value());
        auto w = random_binary_weights(g.n(), rng);
        auto r = wmisds_chordal({g, w}, *peo);
        CHECK(r.value == naive_wisds(g, w));
        CHECK(is_maximal_independent_set(g, r.solution));
        long long sum = 0;
        r.solution.for_each([&](int v) { sum += w[v]; });
        CHECK(sum == r.value);
    }
    for (int round = 0; round < 150; ++round) {
        Graph t = random_tree(3 + round % 10, rng);
        auto w = random_binary_weights(t.n(), rng);
        auto r = wmisds_chordal({t, w}, *chordal_peo(t));
        CHECK(r.value == naive_wisds(t, w));
    }
    // chordal graphs beyond interval and tree shapes
    for (int round = 0; round < 800; ++round) {
        Graph g = random_chordal(3 + round % 10, rng);
        auto peo = chordal_peo(g);
        REQUIRE(peo.has_value());
        auto w = random_binary_weights(g.n(), rng);
        auto r = wmisds_chordal({g, w}, *peo);
        CHECK(r.value == naive_wisds(g, w));
        VertexSet u = random_independent_subset(g, 0.5, rng);
        CHECK(max_ext_vc_chordal(g, u).value == naive_max_ext_vc(g, to_mask(u)));
    }
    // general non-negative weights on the same corpora
    for (uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = random_interval_graph(4 + seed % 8, 1000 + seed);
        std::vector<long long> w(g.n());
        for (auto& x : w) x = std::uniform_int_distribution<int>(0, 5)(rng);
        auto r = wmisds_chordal({g, w}, *chordal_peo(g));
        CHECK(r.value == naive_wisds(g, w));
    }
}

TEST_CASE("decide ext vc on chordal graphs") {
    CHECK_THROWS_AS(decide_ext_vc_chordal(ExtInstance::ext_vc(cycle(4), VertexSet(4))),
                    Unsupported);

    auto k4_one = decide_ext_vc_chordal(ExtInstance::ext_vc(complete(4), vs(4, {0})));
    CHECK(k4_one.yes);
    std::string why;
    CHECK_MESSAGE(verify_vc_certificate(complete(4), vs(4, {0}), *k4_one.certificate, &why),
                  why);
    // any three vertices of K4 form a minimal cover, so two forced vertices
    // extend; only the full vertex set fails
    CHECK(decide_ext_vc_chordal(ExtInstance::ext_vc(complete(4), vs(4, {0, 1}))).yes ==
          decide_ext_vc_bf(ExtInstance::ext_vc(complete(4), vs(4, {0, 1}))).yes);
    CHECK(decide_ext_vc_chordal(ExtInstance::ext_vc(complete(4), vs(4, {0, 1}))).yes);
    CHECK_FALSE(
        decide_ext_vc_chordal(ExtInstance::ext_vc(complete(4), VertexSet::full(4))).yes);

    std::mt19937 rng(83);
    for (uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_interval_graph(4 + seed % 9, 7000 + seed);
        VertexSet u = random_subset(g.n(), 0.35, rng);
        auto r = decide_ext_vc_chordal(ExtInstance::ext_vc(g, u));
        CHECK(r.yes == naive_ext_vc(g, to_mask(u)));
        if (r.yes)
            CHECK_MESSAGE(verify_vc_certificate(g, u, *r.certificate, &why), why);
    }

    // trees are chordal: agree with the forest path
    for (int round = 0; round < 120; ++round) {
        Graph t = random_tree(3 + round % 9, rng);
        VertexSet u = random_subset(t.n(), 0.35, rng);
        CHECK(decide_ext_vc_chordal(ExtInstance::ext_vc(t, u)).yes ==
              decide_forest(ExtInstance::ext_vc(t, u)).yes);
    }
}

TEST_CASE("max ext vc on chordal graphs") {
    auto p3 = max_ext_vc_chordal(path(3), vs(3, {0, 2}));
    CHECK(p3.value == 2);
    CHECK(p3.kept == vs(3, {0, 2}));

    VertexSet leaves(6);
    for (int v = 1; v <= 5; ++v) leaves.add(v);
    auto st = max_ext_vc_chordal(star(5), leaves);
    CHECK(st.value == 5);

    CHECK_THROWS_AS(max_ext_vc_chordal(path(3), vs(3, {0, 1})), Unsupported);
    CHECK_THROWS_AS(max_ext_vc_chordal(cycle(5), vs(5, {0})), Unsupported);

    std::mt19937 rng(87);
    for (uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_interval_graph(4 + seed % 9, 9000 + seed);
        VertexSet u = random_independent_subset(g, 0.5, rng);
        auto r = max_ext_vc_chordal(g, u);
        CHECK(r.value == naive_max_ext_vc(g, to_mask(u)));
        // the identity behind the construction
        auto sub = induced_subgraph(g, closed_neighborhood(g, u));
        WeightedGraph wg{sub.graph, std::vector<long long>(sub.graph.n(), 0)};
        for (size_t i = 0; i < sub.to_original.size(); ++i)
            if (u.contains(sub.to_original[i])) wg.weights[i] = 1;
        auto isds = wmisds_chordal(wg, *chordal_peo(sub.graph));
        CHECK(u.cardinality() - r.value == isds.value);
        // certificate attains the optimum
        std::string why;
        CHECK_MESSAGE(verify_vc_certificate(g, r.kept, r.certificate, &why), why);
        CHECK(r.certificate.solution.set_intersection(u).cardinality() == r.value);
    }
}

TEST_CASE("min ext is value") {
    CHECK(min_ext_is_value(path(3), vs(3, {1})) == 1);
    CHECK(min_ext_is_value(path(3), VertexSet::full(3)) == 3);
    CHECK(min_ext_is_value(cycle(4), vs(4, {0})) == 2);

    std::mt19937 rng(91);
    for (int round = 0; round < 100; ++round) {
        Graph g = gnp(8, 0.3, rng);
        VertexSet u = random_subset(8, 0.5, rng);
        CHECK(min_ext_is_value(g, u) == naive_min_ext_is(g, to_mask(u)));
    }
}

TEST_CASE("weight file format") {
    std::istringstream in("0\n2\n1\n");
    auto w = parse_weights(in, 3);
    CHECK(w == std::vector<long long>{0, 2, 1});
    std::ostringstream out;
    write_weights(out, w);
    CHECK(out.str() == "0\n2\n1\n");
    std::istringstream short_in("1\n");
    CHECK_THROWS_AS(parse_weights(short_in, 3), FormatError);
    std::istringstream neg("1\n-2\n0\n");
    CHECK_THROWS_AS(parse_weights(neg, 3), FormatError);
}

TEST_CASE("wmisds scales to large interval graphs") {
    Graph g = random_interval_graph(5000, 12345);
    auto peo = chordal_peo(g);
    REQUIRE(peo.has_value());
    std::mt19937 rng(93);
    auto w = random_binary_weights(g.n(), rng);
    auto r = wmisds_chordal({g, w}, *peo);
    CHECK(is_maximal_independent_set(g, r.solution));
    long long sum = 0;
    r.solution.for_each([&](int v) { sum += w[v]; });
    CHECK(sum == r.value);
}
