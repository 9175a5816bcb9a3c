// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include "threshcert/certify.hpp"
#include "threshcert/compare.hpp"
#include "threshcert/errors.hpp"
#include "threshcert/exactpoly.hpp"
#include "threshcert/graphs.hpp"
#include "threshcert/oracle.hpp"
#include "threshcert/tsubenum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace threshcert;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Notes {
public:
    void fail(const std::string& what) {
        ok_ = false;
        if (++count_ <= 5) out_ << (count_ > 1 ? "; " : "") << what;
    }
    void info(const std::string& what) {
        if (count_ == 0) info_ << (info_.tellp() > 0 ? "; " : "") << what;
    }
    Outcome done() const {
        if (ok_) return {true, info_.str()};
        std::string d = out_.str();
        if (count_ > 5) d += "; ... " + std::to_string(count_ - 5) + " more";
        return {false, d};
    }

private:
    bool ok_ = true;
    int count_ = 0;
    std::ostringstream out_, info_;
};

int worker_count() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

std::string es(int e) { return "e=" + std::to_string(e); }

// 1. certify --e 4..30
Outcome certification() {
    Notes n;
    std::uint64_t total = 0;
    for (int e = 4; e <= 30; ++e) {
        if (edge_params(e).t == 0) continue;
        try {
            CertifyAllOptions opt;
            opt.jobs = worker_count();
            const auto certs = certify_all(e, opt);
            if (certs.size() != count_S(e) - 2) n.fail(es(e) + ": certificate count mismatch");
            for (const auto& c : certs) {
                const auto why = recheck_certificate(c);
                if (!why.empty()) n.fail(es(e) + " " + c.steps.to_string() + ": recheck: " + why);
            }
            total += certs.size();
        } catch (const std::exception& ex) {
            n.fail(es(e) + ": " + ex.what());
        }
    }
    n.info(std::to_string(total) + " certificates, all rechecked");
    return n.done();
}

// 2. omega_e = f(k_e) for t_e = 0
Outcome omega_bell() {
    Notes n;
    int checked = 0;
    for (int e = 4; e <= 130; ++e) {
        const auto p = edge_params(e);
        if (p.t != 0 || p.k < 4) continue;
        const auto w = omega_value(e);
        const Rational f = bell_f(Rational(p.k));
        if (!w.exact)
            n.fail(es(e) + ": omega is not rational");
        else if (*w.exact != f)
            n.fail(es(e) + ": omega " + to_string(*w.exact) + " != f(k) " + to_string(f));
        ++checked;
    }
    n.info(std::to_string(checked) + " values of e, exact equality");
    return n.done();
}

// 3. crossover at e = 4
Outcome crossover() {
    Notes n;
    for (auto [order, want] : {std::pair{24, Verdict::D_unique}, {25, Verdict::V_unique}}) {
        const auto got = classify(order, 4).verdict;
        if (got != want) n.fail("classify(" + std::to_string(order) + ",4) = " + to_string(got));
        const double d = spectral_radius(adjacency(build_D(order, 4)), 1e-13).rho;
        const double v = spectral_radius(adjacency(build_V(order, 4)), 1e-13).rho;
        if (std::abs(d - v) <= 1e-9) n.fail("numeric margin at n=" + std::to_string(order) + " is not above 1e-9");
        if ((d > v) != (want == Verdict::D_unique)) n.fail("numeric comparison disagrees at n=" + std::to_string(order));
        std::ostringstream m;
        m << "n=" << order << " rho(D)-rho(V)=" << d - v;
        n.info(m.str());
    }
    return n.done();
}

// 4. exhaustive search
Outcome brute_force() {
    Notes n;
    BruteOptions opt;
    opt.jobs = worker_count();
    for (auto [order, e] : {std::pair{5, 4}, {6, 4}, {6, 5}, {7, 4}, {7, 5}, {7, 6}, {8, 4}}) {
        const auto r = brute_force_max(order, e, opt);
        const std::string tag = "(" + std::to_string(order) + "," + std::to_string(e) + ")";
        if (!r.is_D) n.fail(tag + ": maximizer is not D");
        if (r.maximizer_classes != 1) n.fail(tag + ": " + std::to_string(r.maximizer_classes) + " maximizer classes");
        n.info(tag + " " + std::to_string(r.connected) + " connected");
    }
    return n.done();
}

// 5. exact vs numeric spectral radius
Outcome exact_vs_numeric() {
    Notes n;
    int checked = 0;
    double worst = 0;
    const Rational width(1, 1000000000);
    for (int e = 1; e <= 10; ++e)
        for (const auto& s : enumerate_S(e))
            for (int order = s.first() + 2; order <= e + 6; ++order) {
                const auto ex = rho_of_threshold(s, order).refined(width);
                const double mid = ex.interval().midpoint().get_d();
                const double num = spectral_radius(adjacency(threshold_from_tsub(s, order))).rho;
                const double diff = std::abs(num - mid);
                worst = std::max(worst, diff);
                if (ex.interval().width() > width) n.fail(s.to_string() + ": enclosure too wide");
                if (diff > 1e-7) n.fail(s.to_string() + " n=" + std::to_string(order) + ": |diff| = " + std::to_string(diff));
                ++checked;
            }
    std::ostringstream m;
    m << checked << " graphs, max |diff| = " << worst;
    n.info(m.str());
    return n.done();
}

// 6. lemma suite for Psi_e
Outcome psi_lemmas() {
    Notes n;
    for (int e = 4; e <= 60; ++e) {
        const auto p = edge_params(e);
        const IntPoly psi = psi_poly(e);
        if (psi.degree() != 3) n.fail(es(e) + ": not cubic");
        if (psi.lead() <= 0) n.fail(es(e) + ": leading coefficient not positive");
        if (psi.sign_at(Rational(p.k + 1)) >= 0) n.fail(es(e) + ": Psi(k+1) >= 0");
        const auto root = psi_value(e);
        if (compare(root, Rational(p.k + 1)) != std::strong_ordering::greater) n.fail(es(e) + ": psi <= k+1");
        if (!(omega_value(e).enclosure.lo > e + 2)) n.fail(es(e) + ": omega <= e+2");
        if (e <= 27) {
            const SturmSequence st(square_free_part(psi));
            const bool squarefree = square_free_part(psi).degree() == 3;
            const int above = st.count_above(Rational(p.k)) + (psi.sign_at(Rational(p.k)) == 0 ? 1 : 0);
            if (!squarefree || st.count_all() != 3) n.fail(es(e) + ": not three distinct real roots");
            if (above != 1) n.fail(es(e) + ": " + std::to_string(above) + " roots >= k");
        }
    }
    n.info("e=4..60, structure e=4..27");
    return n.done();
}

// 7. Perron ratios of D
Outcome perron_ratios() {
    Notes n;
    double worst = 0;
    for (int e : {5, 7, 8, 12}) {
        const int b = edge_params(e).b;
        for (int order : {b, e + 4}) {
            const auto num = perron_ratios_D(order, e);
            const auto f = perron_ratio_formulas(num.gamma, e);
            for (auto [a, c] : {std::pair{num.y2, f.y2}, {num.yk1, f.yk1}, {num.yk2, f.yk2}}) {
                worst = std::max(worst, std::abs(a - c));
                if (std::abs(a - c) > 1e-7) n.fail(es(e) + " n=" + std::to_string(order) + ": ratio off by " + std::to_string(std::abs(a - c)));
            }
        }
    }
    std::ostringstream m;
    m << "max |diff| = " << worst;
    n.info(m.str());
    return n.done();
}

// 8. range 86..350
Outcome corollary_range() {
    Notes n;
    const auto rep = corollary_range_check(86, 350);
    for (const auto& ent : rep.entries)
        if (ent.status == RangeCheckEntry::Status::Fail) {
            std::ostringstream m;
            m.precision(12);
            m << es(ent.e) << " (k=" << ent.k << ", t=" << ent.t << "): bound " << ent.bound->get_d()
              << " >= e+2+13sqrt(e) = " << ent.e + 2 + 13 * std::sqrt(static_cast<double>(ent.e));
            n.fail(m.str());
        }
    n.info(std::to_string(rep.passed) + " pass, " + std::to_string(rep.skipped) + " skipped (t=0)");
    return n.done();
}

// 9. R_G law and closed forms
Outcome r_law() {
    Notes n;
    std::mt19937 rng(20250101);
    for (int i = 0; i < 50; ++i) {
        const int e = std::uniform_int_distribution<int>(4, 22)(rng);
        const auto all = enumerate_S(e);
        const auto& s = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        const auto r = r_generic(s);
        const auto rho1 = rho_tsub_join(s);
        const std::string tag = s.to_string();
        if (sign_at(r.num, rho1) != 0) n.fail(tag + ": R_G(rho(T_1)) != 0");
        if (sign_at(r.den, rho1) == 0) n.fail(tag + ": pole at rho(T_1)");
        // R' = (num' den - num den') / den^2 > 0 above rho(T_1): every real root of
        // the derivative numerator and of den is <= rho(T_1), and both leads are positive.
        const IntPoly dnum = r.num.derivative() * r.den - r.num * r.den.derivative();
        if (dnum.is_zero() || dnum.lead() <= 0) n.fail(tag + ": derivative numerator not positive at infinity");
        for (const IntPoly* p : {&dnum, &r.den})
            for (const auto& root : real_roots(*p))
                if (compare(root.root, rho1) == std::strong_ordering::greater) n.fail(tag + ": critical point or pole above rho(T_1)");
        // spot check: values increase on a rational grid above rho(T_1)
        const Rational start = rho1.refined(Rational(1, 1000)).hi() + Rational(1, 100);
        Rational prev = r.num.eval(start) / r.den.eval(start);
        if (prev <= 0) n.fail(tag + ": R_G not positive just above rho(T_1)");
        for (int j = 1; j <= 20; ++j) {
            const Rational x = start + Rational(j, 2);
            const Rational v = r.num.eval(x) / r.den.eval(x);
            if (v <= prev) n.fail(tag + ": not increasing on the grid");
            prev = v;
        }
    }
    for (int e = 1; e <= 30; ++e) {
        const auto rv = r_V_closed_form(e);
        if (!same_rational_function(r_generic(v_steps(e)), {rv.num, rv.den})) n.fail(es(e) + ": R_V closed form");
        if (e < 4 || edge_params(e).t == 0) continue;
        const auto rd = r_D_closed_form(e);
        if (!same_rational_function(r_generic(d_steps(e)), {rd.num, rd.den})) n.fail(es(e) + ": R_D closed form");
    }
    n.info("50 random candidates; closed forms e<=30");
    return n.done();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"certification e=4..30", certification},
        {"omega_e equals f(k_e) when t_e=0", omega_bell},
        {"crossover at e=4", crossover},
        {"brute-force extremality", brute_force},
        {"exact vs numeric spectral radius", exact_vs_numeric},
        {"Psi_e lemma suite", psi_lemmas},
        {"Perron ratio formulas", perron_ratios},
        {"corollary range 86..350", corollary_range},
        {"R_G law and closed forms", r_law},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream t;
        t.precision(2);
        t << std::fixed << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << t.str()
                  << " s] " << o.detail << std::endl;
        if (!o.pass) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
