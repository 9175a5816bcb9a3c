#include "threshcert/errors.hpp"
#include "threshcert/exactpoly.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace threshcert;

namespace {

IntPoly from_roots(const std::vector<long>& roots, long lead = 1) {
    IntPoly p{lead};
    for (long r : roots) p = p * IntPoly{-r, 1};
    return p;
}

// det(x I - A) at an integer x by fraction-free Bareiss elimination.
Integer det_shifted(const SquareMatrix& a, long x) {
    const int n = a.size();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = (i == j ? x : 0) - a.at(i, j);
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

bool equal(const AlgebraicReal& a, const Rational& r) { return compare(a, r) == std::strong_ordering::equal; }

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const IntPoly p{1, 2, 3};
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p * IntPoly{0, 1} == IntPoly{0, 1, 2, 3});
    CHECK(p.derivative() == IntPoly{2, 6});
    CHECK(IntPoly{4, 6, 2}.content() == 2);
    CHECK(IntPoly{4, -6, -2}.primitive() == IntPoly{-2, 3, 1});
    CHECK(p.eval(Rational(1, 2)) == Rational(11, 4));
    CHECK(IntPoly{0, 0, 5}.trailing_zeros() == 2);
    CHECK(IntPoly{-2, 0, 1}.to_string() == "x^2 - 2");
    CHECK_THROWS_AS(IntPoly().lead(), ZeroPolynomial);
}

TEST_CASE("exact division and gcd") {
    const IntPoly a = from_roots({1, 2, 2, -3});
    const IntPoly b = from_roots({2, 5});
    CHECK(gcd(a, b) == IntPoly{-2, 1});
    CHECK(exact_divide(a, IntPoly{-2, 1}) == from_roots({1, 2, -3}));
    CHECK_THROWS_AS(exact_divide(a, IntPoly{-7, 1}), InvalidArgument);
    CHECK(square_free_part(a) == from_roots({1, 2, -3}));
}

TEST_CASE("square-free factorization on random products") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> root(-6, 6);
    for (int it = 0; it < 100; ++it) {
        std::vector<long> r1, r2, r3;
        std::vector<long> pool{-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6};
        std::shuffle(pool.begin(), pool.end(), rng);
        const int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3), c = static_cast<int>(rng() % 2);
        std::size_t idx = 0;
        for (int i = 0; i < a; ++i) r1.push_back(pool[idx++]);
        for (int i = 0; i < b; ++i) r2.push_back(pool[idx++]);
        for (int i = 0; i < c; ++i) r3.push_back(pool[idx++]);
        const IntPoly f1 = from_roots(r1), f2 = from_roots(r2), f3 = from_roots(r3);
        const long lead = 1 + static_cast<long>(rng() % 4);
        const IntPoly p = (f1 * f2 * f2 * f3 * f3 * f3) * Integer(lead);
        if (p.is_constant()) continue;
        const auto fs = square_free_factorization(p);
        auto at = [&](std::size_t i) { return i < fs.size() ? fs[i] : IntPoly{1}; };
        CHECK(at(0) == f1);
        CHECK(at(1) == f2);
        CHECK(at(2) == f3);
        CHECK(square_free_part(p) == f1 * f2 * f3);

        // Distinct root counts are unchanged by square-free reduction.
        const RationalInterval iv{-10, 10};
        CHECK(sturm_count(p, iv) == static_cast<int>(r1.size() + r2.size() + r3.size()));
        CHECK(sturm_count(square_free_part(p), iv) == sturm_count(p, iv));
        CHECK(SturmSequence(square_free_part(p)).count_all() == sturm_count(p, iv));
    }
}

TEST_CASE("characteristic polynomials") {
    CHECK(charpoly(SquareMatrix(3, {0, 1, 1, 1, 0, 1, 1, 1, 0})) == IntPoly{-2, -3, 0, 1});
    CHECK(charpoly(SquareMatrix(5, {0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0})) ==
          IntPoly{0, 0, 0, -4, 0, 1});
    CHECK(charpoly(SquareMatrix(0)) == IntPoly{1});

    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
        const int n = 2 + static_cast<int>(rng() % 8);
        SquareMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) a.at(i, j) = a.at(j, i) = 1;
        const IntPoly p = charpoly(a);
        CHECK(p.degree() == n);
        for (long x = -3; x <= n; ++x) CHECK(p.eval(Rational(x)) == Rational(det_shifted(a, x)));
    }
}

TEST_CASE("Sturm counts") {
    const IntPoly p{-2, 0, 1};
    CHECK(sturm_count(p, {0, 2}) == 1);
    CHECK(sturm_count(p, {-2, 2}) == 2);
    CHECK(sturm_count(IntPoly{16, -48, -32, 8}, {3, Rational(root_bound(IntPoly{16, -48, -32, 8}))}) == 1);
    CHECK(sign_at(p, Rational(1)) == -1);
    CHECK(sign_at(p, Rational(2)) == 1);
    CHECK(IntPoly{16, -48, -32, 8}.sign_at(Rational(4)) == -1);
}

TEST_CASE("root bound") {
    std::mt19937 rng(3);
    for (int it = 0; it < 50; ++it) {
        std::vector<long> r;
        for (int i = 0; i < 4; ++i) r.push_back(static_cast<long>(rng() % 41) - 20);
        const IntPoly p = from_roots(r, 3);
        const Integer b = root_bound(p);
        for (long x : r) CHECK(abs(Integer(x)) < b);
        CHECK((b & (b - 1)) == 0);
    }
}

TEST_CASE("k-th largest root with multiplicity") {
    const auto r1 = kth_largest_root(IntPoly{-4, 0, 1}, 1);
    REQUIRE(r1);
    CHECK(equal(*r1, 2));
    CHECK(r1->refined(Rational(1, 1000000)).interval().width() <= Rational(1, 1000000));
    CHECK(equal(*kth_largest_root(IntPoly{-4, 0, 1}, 2), -2));
    CHECK_FALSE(kth_largest_root(IntPoly{1, 0, 1}, 1));
    CHECK_THROWS_AS(kth_largest_root(IntPoly(), 1), ZeroPolynomial);

    const IntPoly p = from_roots({3, 3, 1, -2, -2, -2});
    CHECK(equal(*kth_largest_root(p, 1), 3));
    CHECK(equal(*kth_largest_root(p, 2), 3));
    CHECK(equal(*kth_largest_root(p, 3), 1));
    CHECK(equal(*kth_largest_root(p, 6), -2));
    CHECK_FALSE(kth_largest_root(p, 7));
    const auto rr = real_roots(p);
    REQUIRE(rr.size() == 3);
    CHECK(rr[0].multiplicity == 2);
    CHECK(rr[2].multiplicity == 3);
}

TEST_CASE("random polynomials: roots found in order") {
    std::mt19937 rng(99);
    for (int it = 0; it < 100; ++it) {
        std::vector<long> r;
        const int deg = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < deg; ++i) r.push_back(static_cast<long>(rng() % 11) - 5);
        // An irreducible quadratic factor adds no real roots.
        const IntPoly p = from_roots(r, 1 + static_cast<long>(rng() % 3)) * IntPoly{1, 1, 1};
        std::sort(r.rbegin(), r.rend());
        for (int k = 1; k <= deg; ++k) CHECK(equal(*kth_largest_root(p, k), Rational(r[k - 1])));
        CHECK_FALSE(kth_largest_root(p, deg + 1));
    }
}

TEST_CASE("comparison of algebraic numbers") {
    const auto s2 = *kth_largest_root(IntPoly{-2, 0, 1}, 1);
    const auto s3 = *kth_largest_root(IntPoly{-3, 0, 1}, 1);
    CHECK(compare(s2, s3) == std::strong_ordering::less);
    CHECK(compare(s3, s2) == std::strong_ordering::greater);
    CHECK(compare(*kth_largest_root(IntPoly{-5, 1}, 1), *kth_largest_root(IntPoly{-25, 0, 1}, 1)) ==
          std::strong_ordering::equal);
    // sqrt 2 as the largest root of two different polynomials
    const auto alt = *kth_largest_root(from_roots({-1}) * IntPoly{-2, 0, 1}, 1);
    CHECK(compare(s2, alt) == std::strong_ordering::equal);
    CHECK(compare(s2, Rational(141421, 100000)) == std::strong_ordering::greater);
    CHECK(compare(s2, make_rational(141422, 100000)) == std::strong_ordering::less);

    std::mt19937 rng(5);
    for (int it = 0; it < 100; ++it) {
        const long a = 2 + static_cast<long>(rng() % 60), b = 2 + static_cast<long>(rng() % 60);
        const auto ra = *kth_largest_root(IntPoly{-a, 0, 1}, 1), rb = *kth_largest_root(IntPoly{-b, 0, 1}, 1);
        CHECK(compare(ra, rb) == (a <=> b));
    }
}

TEST_CASE("sign at algebraic points") {
    const auto s2 = *kth_largest_root(IntPoly{-2, 0, 1}, 1);
    CHECK(sign_at(IntPoly{-2, 0, 1}, s2) == 0);
    CHECK(sign_at(IntPoly{-1, 1}, s2) == 1);
    CHECK(sign_at(IntPoly{-3, 2}, s2) == -1);
    CHECK(sign_at(IntPoly{-4, 0, 0, 1}, s2) == -1);
}

TEST_CASE("rationality detection") {
    CHECK(kth_largest_root(IntPoly{-16, 0, 9}, 1)->is_rational());
    CHECK(kth_largest_root(IntPoly{-16, 0, 9}, 1)->rationalized().exact_value() == Rational(4, 3));
    CHECK_FALSE(kth_largest_root(IntPoly{-2, 0, 1}, 1)->is_rational());
}

TEST_CASE("certified rational function evaluation") {
    const auto s2 = *kth_largest_root(IntPoly{-2, 0, 1}, 1);
    const Rational eps(1, 1000000000);
    const auto iv = eval_ratfun(IntPoly{0, 1}, IntPoly{1}, s2, eps);
    CHECK(iv.width() <= eps);
    CHECK(iv.lo.get_d() <= 1.4142135623730951);
    CHECK(iv.hi.get_d() >= 1.4142135623730949);

    // lambda (lambda + 1)(lambda^2 - lambda - 20) / (lambda^2 - 10) at 8 is 48
    const IntPoly num = IntPoly{0, 1} * IntPoly{1, 1} * IntPoly{-20, -1, 1};
    const auto at8 = eval_ratfun(num, IntPoly{-10, 0, 1}, AlgebraicReal::from_rational(8), eps);
    CHECK(at8.contains(48));

    // 10 x^2 - 17 has a root (about 1.304) inside the initial isolating interval of sqrt 3.
    const auto s3 = *kth_largest_root(IntPoly{-3, 0, 1}, 1);
    const auto near = eval_ratfun(IntPoly{1}, IntPoly{-17, 0, 10}, s3, eps);
    CHECK(near.contains(Rational(1, 13)));
    CHECK_THROWS_AS(eval_ratfun(IntPoly{1}, IntPoly{-3, 0, 1}, s3, eps), PoleAtPoint);
}

TEST_CASE("simplest rational and parsing") {
    CHECK(simplest_rational_between(make_rational(31, 10), make_rational(32, 10)) == Rational(16, 5));
    CHECK(simplest_rational_between(make_rational(3, 10), make_rational(4, 10)) == Rational(1, 3));
    CHECK(simplest_rational_between(Rational(-7, 2), Rational(-3)) == Rational(-3));
    CHECK(parse_rational("-10602/49") == Rational(-10602, 49));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(to_decimal(Rational(2, 3), 4, false) == "0.6666");
    CHECK(to_decimal(Rational(2, 3), 4, true) == "0.6667");
    CHECK(to_decimal(Rational(-2, 3), 2, false) == "-0.67");
}
