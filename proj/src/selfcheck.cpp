#include "threshcert/selfcheck.hpp"

#include "threshcert/certify.hpp"
#include "threshcert/compare.hpp"
#include "threshcert/errors.hpp"
#include "threshcert/exactpoly.hpp"
#include "threshcert/graphs.hpp"
#include "threshcert/oracle.hpp"
#include "threshcert/tsubenum.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace threshcert {

namespace {

class Suite {
public:
    explicit Suite(std::string name) { r_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++r_.checks;
        if (!ok) r_.failures.push_back(what);
    }

    template <class F>
    void guarded(const std::string& what, F f) {
        try {
            f();
        } catch (const std::exception& ex) {
            ++r_.checks;
            r_.failures.push_back(what + ": " + ex.what());
        }
    }

    SuiteResult result() { return std::move(r_); }

private:
    SuiteResult r_;
};

std::string es(int e) { return " (e = " + std::to_string(e) + ")"; }

SuiteResult graphs_suite() {
    Suite s("graphs");
    s.guarded("graphs", [&] {
        s.check(edge_params(4) == EdgeParams{4, 3, 1, 5}, "edge_params(4)");
        s.check(edge_params(10) == EdgeParams{10, 5, 0, 6}, "edge_params(10)");
        s.check(edge_params(130) == EdgeParams{130, 16, 10, 18}, "edge_params(130)");
        for (int e = 1; e <= 60; ++e) {
            const auto p = edge_params(e);
            s.check(binom2(p.k) <= e && e < binom2(p.k + 1) && p.t >= 0 && p.t <= p.k - 1, "edge_params range" + es(e));
            s.check(d_steps(e).sum() == e, "D steps sum" + es(e));
            for (int n = std::max(p.b, e + 2); n <= e + 5; ++n) {
                const auto d = adjacency(build_D(n, e)), v = adjacency(build_V(n, e));
                s.check(d.edge_count() == n - 1 + e && v.edge_count() == n - 1 + e, "sizes of D and V" + es(e));
                s.check(is_stepwise(d) && is_stepwise(v), "stepwise D and V" + es(e));
                s.check(tsubgraph_of(build_D(n, e)) == d_steps(e), "T-subgraph of D" + es(e));
                const auto deg = d.degrees();
                s.check(std::is_sorted(deg.rbegin(), deg.rend()), "degrees weakly decreasing" + es(e));
            }
        }
        for (int e = 1; e <= 14; ++e)
            for (const auto& st : enumerate_S(e)) {
                const auto g = threshold_from_tsub(st, st.first() + 5);
                s.check(tsubgraph_of(g) == st, "roundtrip " + st.to_string());
                const auto a = adjacency(g);
                s.check(from_graph6(to_graph6(a)) == a, "graph6 roundtrip " + st.to_string());
            }
    });
    return s.result();
}

SuiteResult exactpoly_suite() {
    Suite s("exactpoly");
    s.guarded("exactpoly", [&] {
        s.check(graph_charpoly(complete_graph(3)) == IntPoly{-2, -3, 0, 1}, "charpoly K_3");
        s.check(graph_charpoly(star_graph(4)) == IntPoly{0, 0, 0, -4, 0, 1}, "charpoly K_{1,4}");
        const IntPoly x2m2{-2, 0, 1};
        s.check(sturm_count(x2m2, {0, 2}) == 1 && sturm_count(x2m2, {-2, 2}) == 2, "sturm counts of x^2 - 2");
        const auto r1 = kth_largest_root(IntPoly{-4, 0, 1}, 1), r2 = kth_largest_root(IntPoly{-4, 0, 1}, 2);
        s.check(r1 && compare(*r1, Rational(2)) == std::strong_ordering::equal, "largest root of x^2 - 4");
        s.check(r2 && compare(*r2, Rational(-2)) == std::strong_ordering::equal, "second root of x^2 - 4");
        s.check(!kth_largest_root(IntPoly{1, 0, 1}, 1), "x^2 + 1 has no real root");
        const auto a = *kth_largest_root(IntPoly{-2, 0, 1}, 1), b = *kth_largest_root(IntPoly{-3, 0, 1}, 1);
        s.check(compare(a, b) == std::strong_ordering::less, "sqrt 2 < sqrt 3");
        s.check(compare(*kth_largest_root(IntPoly{-5, 1}, 1), *kth_largest_root(IntPoly{-25, 0, 1}, 1)) ==
                    std::strong_ordering::equal,
                "5 == largest root of x^2 - 25");
        // charpoly through twin quotient agrees with plain Faddeev-LeVerrier
        for (int e = 1; e <= 12; ++e)
            for (const auto& st : enumerate_S(e)) {
                const auto g = adjacency(threshold_from_tsub(st, st.first() + 3));
                s.check(threshold_charpoly(g) == graph_charpoly(g), "twin quotient charpoly " + st.to_string());
            }
    });
    return s.result();
}

SuiteResult tsubenum_suite() {
    Suite s("tsubenum");
    s.guarded("tsubenum", [&] {
        for (int e = 1; e <= 40; ++e) {
            const auto all = enumerate_S(e);
            s.check(all.size() == count_S(e), "stream length equals count_S" + es(e));
            std::set<std::vector<int>> seen;
            for (std::size_t i = 0; i < all.size(); ++i) {
                s.check(all[i].sum() == e, "sum" + es(e));
                seen.insert(all[i].vec());
                if (i > 0) s.check(all[i] < all[i - 1], "lexicographically decreasing" + es(e));
            }
            s.check(seen.size() == all.size(), "no duplicates" + es(e));
            std::uint64_t blocks = 0;
            for (int f : first_part_blocks(e)) blocks += count_S_with_first(e, f);
            s.check(blocks == count_S(e), "blocks cover the stream" + es(e));
        }
        s.check(count_S(10) == 10 && count_S(12) == 15, "q(10) and q(12)");
        s.check(enumerate_S_star(4).empty(), "S*_4 is empty");
    });
    return s.result();
}

SuiteResult certify_suite(int jobs) {
    Suite s("certify");
    s.guarded("certify", [&] {
        for (int e = 4; e <= 14; ++e) {
            if (edge_params(e).t == 0) continue;
            CertifyAllOptions opt;
            opt.jobs = jobs;
            const auto certs = certify_all(e, opt);
            s.check(certs.size() == enumerate_S_star(e).size(), "one certificate per candidate" + es(e));
            for (const auto& c : certs) {
                const auto why = recheck_certificate(c);
                s.check(why.empty(), "recheck " + c.steps.to_string() + es(e) + ": " + why);
            }
        }
        for (int e = 4; e <= 30; ++e) {
            if (edge_params(e).t == 0) continue;
            const auto rd = r_D_closed_form(e);
            s.check(same_rational_function(r_generic(d_steps(e)), {rd.num, rd.den}), "R_D closed form" + es(e));
            const auto rv = r_V_closed_form(e);
            s.check(same_rational_function(r_generic(v_steps(e)), {rv.num, rv.den}), "R_V closed form" + es(e));
            s.check(compare(rho_tsub_join(d_steps(e)), *kth_largest_root(rd.cubic, 1)) == std::strong_ordering::equal,
                    "rho(T_1(D)) is the largest cubic root" + es(e));
        }
    });
    return s.result();
}

SuiteResult psi_suite(bool tamper) {
    Suite s("psi");
    s.guarded("psi", [&] {
        auto psi_of = [&](int e) {
            IntPoly p = psi_poly(e);
            if (tamper) p += IntPoly{1};
            return p;
        };
        s.check(psi_of(4) == IntPoly{16, -48, -32, 8}, "Psi_4 coefficients");
        s.check(psi_of(10) == IntPoly{0, -960, -840, 120}, "Psi_10 coefficients");
        for (int e = 4; e <= 60; ++e) {
            const auto p = edge_params(e);
            const IntPoly psi = psi_of(e);
            s.check(psi.degree() == 3 && psi.lead() > 0, "cubic with positive lead" + es(e));
            s.check(psi.sign_at(Rational(p.k + 1)) < 0, "Psi_e(k+1) < 0" + es(e));
            const auto root = kth_largest_root(psi, 1);
            s.check(root && compare(*root, Rational(p.k + 1)) == std::strong_ordering::greater, "psi_e > k + 1" + es(e));
            if (p.t == 0 && p.k >= 4 && root) {
                const Rational closed = make_rational((p.k - 1) * (p.k - 1), p.k - 3);
                s.check(compare(*root, closed) == std::strong_ordering::equal, "psi_e = (k-1)^2/(k-3)" + es(e));
            }
        }
        for (int e = 4; e <= 60; ++e) {
            const auto w = omega_value(e);
            s.check(w.enclosure.lo > e + 2, "omega_e > e + 2" + es(e));
            const auto p = edge_params(e);
            if (p.t == 0 && p.k >= 4)
                s.check(w.exact && *w.exact == bell_f(Rational(p.k)), "omega_e = f(k)" + es(e));
        }
        for (int e = 4; e <= 40; ++e) {
            const auto r = psi_root_structure(e);
            s.check(e <= 27 ? r.structure == PsiStructure::ThreeDistinctOneAboveK : r.structure == PsiStructure::MonotoneAboveK,
                    "root structure" + es(e));
        }
        s.check(classify(60, 10).verdict == Verdict::Tie, "classify(60, 10) = Tie");
        s.check(classify(24, 4).verdict == Verdict::D_unique && classify(25, 4).verdict == Verdict::V_unique,
                "crossover at e = 4");
        s.check(corollary_range_check(131, 350).all_pass(), "corollary range 131..350");
        for (int e = 5; e <= 400; ++e)
            if (edge_params(e).t > 0) s.check(ell_bound(e).ell > edge_params(e).k + 1, "ell_e > k + 1" + es(e));
    });
    return s.result();
}

SuiteResult oracle_suite(int jobs) {
    Suite s("oracle");
    s.guarded("oracle", [&] {
        s.check(std::abs(spectral_radius(complete_graph(4)).rho - 3) < 1e-9, "rho(K_4)");
        s.check(std::abs(spectral_radius(star_graph(4)).rho - 2) < 1e-9, "rho(K_{1,4})");
        for (int e = 1; e <= 8; ++e)
            for (const auto& st : enumerate_S(e))
                for (int n = st.first() + 2; n <= e + 4; ++n) {
                    const double num = spectral_radius(adjacency(threshold_from_tsub(st, n))).rho;
                    const auto ex = rho_of_threshold(st, n).refined(Rational(1, 1000000000));
                    s.check(std::abs(num - ex.approx()) < 1e-7, "exact vs numeric rho " + st.to_string());
                }
        for (int e = 4; e <= 12; ++e) {
            const auto p = edge_params(e);
            for (int n = p.b; n <= e + 12; ++n) {
                const auto c = classify(n, e);
                const double rd = spectral_radius(adjacency(build_D(n, e))).rho;
                if (n < e + 2) {
                    s.check(c.verdict == Verdict::D_unique, "classify below e + 2" + es(e));
                    continue;
                }
                const double rv = spectral_radius(adjacency(build_V(n, e))).rho;
                const bool ok = c.verdict == Verdict::Tie ? std::abs(rd - rv) < 1e-9
                              : c.verdict == Verdict::D_unique ? rd > rv + 1e-9
                                                               : rv > rd + 1e-9;
                s.check(ok, "classify vs numeric at n = " + std::to_string(n) + es(e));
            }
        }
        for (int e : {5, 7, 8, 12}) {
            const int b = edge_params(e).b;
            for (int n : {b, b + 3}) {
                const auto num = perron_ratios_D(n, e);
                const auto f = perron_ratio_formulas(num.gamma, e);
                s.check(std::abs(num.y2 - f.y2) < 1e-7 && std::abs(num.yk1 - f.yk1) < 1e-7 &&
                            std::abs(num.yk2 - f.yk2) < 1e-7,
                        "Perron ratios" + es(e));
            }
        }
        BruteOptions bo;
        bo.jobs = jobs;
        for (auto [n, e] : {std::pair{5, 4}, {6, 4}, {6, 5}, {6, 3}}) {
            const auto r = brute_force_max(n, e, bo);
            s.check(r.is_D && r.maximizer_classes == 1, "brute force maximizer is D(" + std::to_string(n) + "," +
                                                            std::to_string(e) + ")");
        }
    });
    return s.result();
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& opt,
                                       const std::function<void(const SuiteResult&)>& on_suite) {
    std::vector<SuiteResult> out;
    auto add = [&](SuiteResult r) {
        if (on_suite) on_suite(r);
        out.push_back(std::move(r));
    };
    add(graphs_suite());
    add(exactpoly_suite());
    add(tsubenum_suite());
    add(certify_suite(opt.jobs));
    add(psi_suite(opt.tamper_psi));
    if (opt.oracle) add(oracle_suite(opt.jobs));
    return out;
}

}  // namespace threshcert
