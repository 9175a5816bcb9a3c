#include "threshcert/errors.hpp"
#include "threshcert/graphs.hpp"
#include "threshcert/tsubenum.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace threshcert;

namespace {

std::vector<int> sorted_degrees(const ThresholdGraph& g) {
    auto d = adjacency(g).degrees();
    std::sort(d.rbegin(), d.rend());
    return d;
}

}  // namespace

TEST_CASE("edge parameters") {
    CHECK(edge_params(4) == EdgeParams{4, 3, 1, 5});
    CHECK(edge_params(10) == EdgeParams{10, 5, 0, 6});
    CHECK(edge_params(130) == EdgeParams{130, 16, 10, 18});
    CHECK(edge_params(0).b == 1);
    CHECK_THROWS_AS(edge_params(-1), InvalidArgument);
    for (int e = 1; e <= 500; ++e) {
        const auto p = edge_params(e);
        CHECK(binom2(p.k) <= e);
        CHECK(e < binom2(p.k + 1));
        CHECK(p.b == (p.t == 0 ? p.k + 1 : p.k + 2));
    }
}

TEST_CASE("D family") {
    auto d54 = build_D(5, 4);
    CHECK(sorted_degrees(d54) == std::vector<int>{4, 4, 3, 3, 2});
    CHECK(d54.size() == 8);
    CHECK(sorted_degrees(build_D(6, 4)) == std::vector<int>{5, 4, 3, 3, 2, 1});
    CHECK(adjacency(build_D(5, 6)) == complete_graph(5));
    CHECK(tsubgraph_of(build_D(9, 5)) == StepSequence{3, 2});
    CHECK(is_stepwise(adjacency(d54)));
    CHECK_THROWS_AS(build_D(4, 4), OrderTooSmall);
    CHECK(d_steps(7) == StepSequence{4, 2, 1});
    CHECK(d_steps(10) == StepSequence{4, 3, 2, 1});
}

TEST_CASE("V family") {
    CHECK(sorted_degrees(build_V(6, 4)) == std::vector<int>{5, 5, 2, 2, 2, 2});
    CHECK(sorted_degrees(build_V(7, 4)) == std::vector<int>{6, 5, 2, 2, 2, 2, 1});
    const auto v = build_V(7, 5);
    CHECK(v.order() == 7);
    CHECK(v.size() == 11);
    CHECK(tsubgraph_of(build_V(9, 5)) == StepSequence{5});
    CHECK_THROWS_AS(build_V(6, 5), OrderTooSmall);

    const auto a = adjacency(build_V(6, 4));
    for (int j = 0; j < 6; ++j) {
        if (j != 0) CHECK(a.edge(0, j));
        if (j != 1) CHECK(a.edge(1, j));
    }
    for (int i = 2; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) CHECK_FALSE(a.edge(i, j));
}

TEST_CASE("threshold graphs from step sequences") {
    CHECK(threshold_from_tsub(StepSequence{4}, 7) == build_V(7, 4));
    CHECK(threshold_from_tsub(StepSequence{3, 1}, 5) == build_D(5, 4));
    CHECK(threshold_from_tsub(StepSequence{3, 2}, 7) == build_D(7, 5));
    CHECK(adjacency(threshold_from_tsub(StepSequence{1}, 3)) == complete_graph(3));
    CHECK_THROWS_AS(threshold_from_tsub(StepSequence{3, 1}, 4), OrderTooSmall);
    CHECK_THROWS(StepSequence({2, 2}));
    CHECK_THROWS(StepSequence({1, 0}));
}

TEST_CASE("roundtrip through adjacency and graph6") {
    for (int e = 1; e <= 16; ++e)
        for (const auto& s : enumerate_S(e)) {
            const auto g = threshold_from_tsub(s, s.first() + 5);
            CHECK(tsubgraph_of(g) == s);
            const auto a = adjacency(g);
            CHECK(is_stepwise(a));
            CHECK(is_connected(a));
            CHECK(a.edge_count() == g.size());
            CHECK(tsubgraph_of(a) == s);
            CHECK(from_graph6(to_graph6(a)) == a);
        }
}

TEST_CASE("graph6 of known graphs") {
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(star_graph(3)) == "Cs");
    CHECK_THROWS(from_graph6(""));
}

TEST_CASE("non-threshold graphs are rejected") {
    DenseGraph c4(4);
    c4.set_edge(0, 1);
    c4.set_edge(1, 2);
    c4.set_edge(2, 3);
    c4.set_edge(3, 0);
    CHECK_FALSE(is_stepwise(c4));
    CHECK_THROWS_AS(tsubgraph_of(c4), InvalidArgument);
}

TEST_CASE("T-subgraph and join adjacency") {
    const auto t = tsub_adjacency(StepSequence{3, 1});
    CHECK(t.order() == 4);
    CHECK(t.edge_count() == 4);
    const auto j = tsub_join_adjacency(StepSequence{3, 1});
    CHECK(j.order() == 5);
    CHECK(j.edge_count() == 8);
    CHECK(j == adjacency(build_D(5, 4)));
}

TEST_CASE("random threshold graphs are stepwise and connected") {
    std::mt19937 rng(20240611);
    for (int it = 0; it < 100; ++it) {
        const int e = std::uniform_int_distribution<int>(1, 25)(rng);
        const auto all = enumerate_S(e);
        const auto& s = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        const int n = s.first() + 2 + std::uniform_int_distribution<int>(0, 6)(rng);
        const auto a = adjacency(threshold_from_tsub(s, n));
        CHECK(is_stepwise(a));
        CHECK(is_connected(a));
        CHECK(a.edge_count() == n - 1 + e);
    }
}
