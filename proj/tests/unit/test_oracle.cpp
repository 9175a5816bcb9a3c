#include "threshcert/errors.hpp"
#include "threshcert/graphs.hpp"
#include "threshcert/oracle.hpp"
#include "threshcert/tsubenum.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace threshcert;

namespace {

double residual(const DenseGraph& g, const PerronData& pd) {
    double r = 0;
    for (int i = 0; i < g.order(); ++i) {
        double s = 0;
        for (int j = 0; j < g.order(); ++j)
            if (g.edge(i, j)) s += pd.vector[j];
        r += (s - pd.rho * pd.vector[i]) * (s - pd.rho * pd.vector[i]);
    }
    return std::sqrt(r);
}

}  // namespace

TEST_CASE("spectral radius of small graphs") {
    CHECK(spectral_radius(complete_graph(4)).rho == doctest::Approx(3).epsilon(1e-10));
    CHECK(spectral_radius(star_graph(4)).rho == doctest::Approx(2).epsilon(1e-10));
    CHECK(spectral_radius(tsub_join_adjacency(StepSequence{4})).rho ==
          doctest::Approx((1 + std::sqrt(33.0)) / 2).epsilon(1e-10));
    const auto pd = spectral_radius(adjacency(build_D(9, 7)));
    CHECK(residual(adjacency(build_D(9, 7)), pd) <= 1e-9);
    DenseGraph two(2);
    CHECK_THROWS_AS(spectral_radius(two), NotConnected);
    CHECK_THROWS_AS(spectral_radius(complete_graph(3), 0), InvalidArgument);
}

TEST_CASE("Perron vectors of stepwise graphs are weakly decreasing") {
    std::mt19937 rng(42);
    for (int it = 0; it < 100; ++it) {
        const int e = std::uniform_int_distribution<int>(1, 20)(rng);
        const auto all = enumerate_S(e);
        const auto& s = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        const int n = s.first() + 2 + std::uniform_int_distribution<int>(0, 5)(rng);
        const auto pd = spectral_radius(adjacency(threshold_from_tsub(s, n)), 1e-12);
        for (int i = 0; i + 1 < n; ++i) CHECK(pd.vector[i] >= pd.vector[i + 1] - 1e-9);
    }
}

TEST_CASE("Perron vector identities of V") {
    for (int e = 4; e <= 10; ++e)
        for (int n : {e + 2, e + 5}) {
            const auto pd = spectral_radius(adjacency(build_V(n, e)), 1e-13);
            const auto& z = pd.vector;
            const double chi = pd.rho;
            CHECK(std::abs((chi + 1) * z[1] - (z[0] + z[1] + e * z[2])) <= 1e-7);
        }
}

TEST_CASE("Perron ratios of D") {
    for (auto [e, n] : {std::pair{5, 7}, {7, 9}, {8, 10}, {12, 16}}) {
        const auto num = perron_ratios_D(n, e);
        const auto f = perron_ratio_formulas(num.gamma, e);
        CHECK(std::abs(num.y2 - f.y2) < 1e-7);
        CHECK(std::abs(num.yk1 - f.yk1) < 1e-7);
        CHECK(std::abs(num.yk2 - f.yk2) < 1e-7);
        if (n > edge_params(e).k + 2) CHECK(std::abs(num.yn * num.gamma - 1) < 1e-7);
    }
    CHECK_THROWS_AS(perron_ratios_D(8, 6), InvalidRegime);
}

TEST_CASE("canonical forms") {
    const auto a = adjacency(build_D(7, 5));
    // relabel by reversing the vertices
    DenseGraph b(7);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (a.edge(i, j)) b.set_edge(6 - i, 6 - j);
    CHECK(isomorphic(a, b));
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK_FALSE(isomorphic(a, adjacency(build_V(7, 5))));
    CHECK(graph_from_code(7, canonical_code(a)).edge_count() == a.edge_count());
}

TEST_CASE("brute force maximization") {
    const auto r54 = brute_force_max(5, 4);
    CHECK(r54.is_D);
    CHECK(r54.maximizer_classes == 1);
    CHECK(r54.subsets == 45);
    const auto r63 = brute_force_max(6, 3);
    CHECK(r63.is_D);
    CHECK(r63.maximizer_classes == 1);
    const auto r70 = brute_force_max(7, 0);
    CHECK(r70.is_D);
    CHECK(r70.is_V);
    CHECK(r70.max_rho == doctest::Approx(std::sqrt(6.0)).epsilon(1e-9));
    CHECK(isomorphic(from_graph6(r70.argmax_graph6), star_graph(6)));
    BruteOptions two;
    two.jobs = 3;
    const auto r64 = brute_force_max(6, 4, two);
    CHECK(r64.is_D);
    CHECK(r64.maximizer_classes == 1);
    CHECK(r64.max_rho == doctest::Approx(spectral_radius(adjacency(build_D(6, 4))).rho).epsilon(1e-9));
    BruteOptions tiny;
    tiny.max_subsets = 10;
    CHECK_THROWS_AS(brute_force_max(6, 4, tiny), BudgetExceeded);
    CHECK_THROWS_AS(brute_force_max(10, 1), InvalidArgument);
}
