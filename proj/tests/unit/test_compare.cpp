#include "threshcert/compare.hpp"
#include "threshcert/errors.hpp"
#include "threshcert/graphs.hpp"
#include "threshcert/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace threshcert;

TEST_CASE("Psi polynomials") {
    CHECK(psi_poly(4) == IntPoly{16, -48, -32, 8});
    CHECK(psi_poly(10) == IntPoly{0, -960, -840, 120});
    // t = 0: k(k-1)(k-2) lambda (lambda + 1)(lambda (k - 3) - (k - 1)^2)
    for (int k = 4; k <= 16; ++k) {
        const long kk = k;
        const IntPoly want = IntPoly{0, kk * (kk - 1) * (kk - 2)} * IntPoly{1, 1} * IntPoly{-(kk - 1) * (kk - 1), kk - 3};
        CHECK(psi_poly(static_cast<int>(binom2(k))) == want);
    }
    CHECK_THROWS_AS(psi_poly(3), InvalidArgument);
}

TEST_CASE("psi values") {
    CHECK(compare(psi_value(10), Rational(8)) == std::strong_ordering::equal);
    CHECK(compare(psi_value(15), Rational(25, 3)) == std::strong_ordering::equal);
    const auto p4 = psi_value(4);
    CHECK(compare(p4, Rational(5)) == std::strong_ordering::greater);
    CHECK(compare(p4, Rational(26, 5)) == std::strong_ordering::less);
    CHECK(psi_poly(4).sign_at(5) == -1);
    CHECK(psi_poly(4).sign_at(Rational(26, 5)) == 1);
    CHECK(psi_data(4).largest_root_simple);
}

TEST_CASE("omega values") {
    const auto w10 = omega_value(10);
    REQUIRE(w10.exact);
    CHECK(*w10.exact == 60);
    const auto w4 = omega_value(4);
    CHECK_FALSE(w4.exact);
    CHECK(w4.enclosure.width() <= Rational(1, 1000000));
    CHECK(w4.enclosure.lo > Rational(242437, 10000));
    CHECK(w4.enclosure.hi < make_rational(242438, 10000));
    for (int k = 4; k <= 16; ++k) {
        const auto w = omega_value(static_cast<int>(binom2(k)));
        REQUIRE(w.exact);
        CHECK(*w.exact == bell_f(Rational(k)));
    }
}

TEST_CASE("classification") {
    CHECK(classify(60, 10).verdict == Verdict::Tie);
    CHECK(classify(59, 10).verdict == Verdict::D_unique);
    CHECK(classify(61, 10).verdict == Verdict::V_unique);
    CHECK(classify(24, 4).verdict == Verdict::D_unique);
    CHECK(classify(25, 4).verdict == Verdict::V_unique);
    const auto c = classify(5, 4);
    CHECK(c.verdict == Verdict::D_unique);
    CHECK_FALSE(c.v_defined);
    CHECK_THROWS_AS(classify(4, 4), OrderTooSmall);
    CHECK_THROWS_AS(classify(200, 131), OutOfProvenRange);
    const auto x = classify(200, 131, true);
    CHECK(x.beyond_proven_range);

    // The verdict matches the numeric spectral radii.
    for (int e : {4, 5, 7, 9}) {
        for (int n = e + 2; n <= 40; ++n) {
            const double d = spectral_radius(adjacency(build_D(n, e)), 1e-12).rho;
            const double v = spectral_radius(adjacency(build_V(n, e)), 1e-12).rho;
            const auto verdict = classify(n, e).verdict;
            if (std::abs(d - v) < 1e-9) continue;
            CHECK(verdict == (d > v ? Verdict::D_unique : Verdict::V_unique));
        }
    }
}

TEST_CASE("Bell's closed form") {
    CHECK(bell_f(5) == 60);
    CHECK(bell_f(4) == 80);
    CHECK(bell_f(17) == Rational(10602, 49));
    CHECK_THROWS_AS(bell_f(3), PoleAtPoint);
}

TEST_CASE("root structure of Psi") {
    CHECK(psi_root_structure(4).structure == PsiStructure::ThreeDistinctOneAboveK);
    CHECK(psi_root_structure(27).structure == PsiStructure::ThreeDistinctOneAboveK);
    const auto r30 = psi_root_structure(30);
    CHECK(r30.structure == PsiStructure::MonotoneAboveK);
    CHECK(r30.roots_at_or_above_k == 1);
    for (int e = 4; e <= 130; ++e) CHECK_NOTHROW(psi_root_structure(e));
}

TEST_CASE("ell bound") {
    const auto b5 = ell_bound(5);
    CHECK(b5.ell == 15);
    CHECK(b5.bound == 7 + Rational(2400, 11));
    CHECK(ell_bound(131).ell == Rational(1048, 57));
    CHECK_THROWS_AS(ell_bound(10), InvalidRegime);
    CHECK_THROWS_AS(ell_bound(4), InvalidArgument);
    for (int e = 5; e <= 400; ++e)
        if (edge_params(e).t > 0) CHECK(ell_bound(e).ell > edge_params(e).k + 1);
}

TEST_CASE("corollary range check") {
    const auto one = corollary_range_check(86, 86);
    CHECK(one.all_pass());
    CHECK(one.passed == 1);

    const auto full = corollary_range_check(86, 350);
    CHECK(full.entries.size() == 265);
    CHECK(full.skipped == 13);
    for (const auto& ent : full.entries) {
        if (edge_params(ent.e).t == 0) {
            CHECK(ent.status == RangeCheckEntry::Status::Skipped);
            CHECK_FALSE(ent.reason.empty());
            continue;
        }
        // Independent floating check well away from the boundary.
        const long double b = ent.bound->get_d();
        const long double lim = ent.e + 2 + 13 * std::sqrt(static_cast<long double>(ent.e));
        if (std::abs(b - lim) > 1e-6L) CHECK((ent.status == RangeCheckEntry::Status::Pass) == (b < lim));
    }
    // e = 92 (k = 14, t = 1) exceeds e + 2 + 13 sqrt(e) by about 0.16
    const auto e92 = corollary_range_check(92, 92);
    CHECK(e92.failed == 1);
    CHECK(corollary_range_check(131, 350).all_pass());
    CHECK_THROWS_AS(corollary_range_check(85, 100), InvalidArgument);
    CHECK_THROWS_AS(corollary_range_check(86, 351), InvalidArgument);
}
