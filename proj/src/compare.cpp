#include "threshcert/compare.hpp"

#include "threshcert/certify.hpp"
#include "threshcert/errors.hpp"
#include "threshcert/graphs.hpp"

namespace threshcert {

IntPoly psi_poly(int e) {
    if (e < 4) throw InvalidArgument("Psi_e needs e >= 4");
    const auto p = edge_params(e);
    const Integer k = p.k, t = p.t;
    const Integer k2 = k * k, k3 = k2 * k, k4 = k3 * k, k5 = k4 * k, t2 = t * t;
    const Integer c3 = (k - 1) * (k - 2) * (k2 - 3 * k + 4 * t);
    const Integer c2 = -(k5 - 6 * k4 + k3 * (4 * t + 15) - k2 * (20 * t + 18) + k * (8 * t2 + 24 * t + 8) - (4 * t2 + 12 * t));
    const Integer c1 = -(k2 - k + 2 * t) * (k3 + k2 * (t - 4) - k * (3 * t - 5) + (4 * t2 - 2 * t - 2));
    const Integer c0 = t * (k - t - 1) * (k2 - 3 * k + 2 * t) * (k2 - k + 2 * t);
    return IntPoly(std::vector<Integer>{c0, c1, c2, c3});
}

AlgebraicReal psi_value(int e, int budget) {
    auto r = kth_largest_root(psi_poly(e), 1, budget);
    if (!r) throw StructureViolation("Psi_e has no real root for e = " + std::to_string(e));
    return *r;
}

namespace {

OmegaValue omega_at(int e, const AlgebraicReal& psi, const Rational& eps, int budget) {
    const auto rv = r_V_closed_form(e);
    const Rational shift(e + 2);
    const AlgebraicReal x = psi.rationalized(budget);
    OmegaValue w;
    if (x.is_exact()) {
        const Rational v = shift + rv.num.eval(x.lo()) / rv.den.eval(x.lo());
        w.exact = v;
        w.enclosure = {v, v};
        return w;
    }
    const auto r = eval_ratfun(rv.num, rv.den, x, eps, budget + 64);
    w.enclosure = {r.lo + shift, r.hi + shift};
    return w;
}

bool largest_simple(const IntPoly& p, const AlgebraicReal& root, int budget) {
    return sign_at(gcd(p, p.derivative()), root, budget) != 0;
}

}  // namespace

OmegaValue omega_value(int e, const Rational& eps, int budget) { return omega_at(e, psi_value(e, budget), eps, budget); }

PsiData psi_data(int e, const Rational& eps, int budget) {
    IntPoly p = psi_poly(e);
    AlgebraicReal psi = psi_value(e, budget);
    PsiData d{e, p, psi, omega_at(e, psi, eps, budget), largest_simple(p, psi, budget)};
    return d;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::D_unique: return "D_unique";
        case Verdict::Tie: return "Tie";
        case Verdict::V_unique: return "V_unique";
    }
    return "";
}

Classification classify(int n, int e, bool allow_extrapolation, int budget) {
    if (e < 4) throw InvalidArgument("classification needs e >= 4");
    const auto p = edge_params(e);
    if (n < p.b) throw OrderTooSmall("n must be at least b_e = " + std::to_string(p.b));
    Classification c;
    if (e > kProvenMaxE) {
        if (!allow_extrapolation)
            throw OutOfProvenRange("classification is proven only for e <= " + std::to_string(kProvenMaxE));
        c.beyond_proven_range = true;
    }
    const AlgebraicReal psi = psi_value(e, budget);
    c.omega = omega_at(e, psi, Rational(1, 1000000), budget);
    if (n < e + 2) {
        c.v_defined = false;
        c.verdict = Verdict::D_unique;
        return c;
    }
    const auto rv = r_V_closed_form(e);
    const IntPoly f = rv.num - Integer(n - e - 2) * rv.den;
    // den_V(psi) = psi^2 - e > 0 since psi > k + 1 > sqrt(e).
    const int s = sign_at(f, psi, budget) * sign_at(rv.den, psi, budget);
    c.verdict = s > 0 ? Verdict::D_unique : s == 0 ? Verdict::Tie : Verdict::V_unique;
    return c;
}

Rational bell_f(const Rational& lambda) {
    if (lambda == 3) throw PoleAtPoint("f has a pole at 3");
    const Rational d = lambda - 3;
    return (lambda + 1) * (lambda + 6) / 2 + 7 + Rational(32) / d + Rational(16) / (d * d);
}

std::string to_string(PsiStructure s) {
    return s == PsiStructure::ThreeDistinctOneAboveK ? "ThreeDistinctOneAboveK" : "MonotoneAboveK";
}

PsiStructureReport psi_root_structure(int e, int budget) {
    const auto params = edge_params(e);
    const IntPoly p = psi_poly(e);
    const SturmSequence sturm(square_free_part(p));
    const Rational k(params.k);
    PsiStructureReport r;
    r.distinct_real_roots = sturm.count_all();
    r.roots_at_or_above_k = sturm.count_above(k) + (p.sign_at(k) == 0 ? 1 : 0);
    r.largest_root_simple = largest_simple(p, psi_value(e, budget), budget);
    const std::string where = " for e = " + std::to_string(e);
    if (!r.largest_root_simple) throw StructureViolation("largest root of Psi_e is multiple" + where);
    if (e <= 27) {
        if (r.distinct_real_roots != 3 || r.roots_at_or_above_k != 1)
            throw StructureViolation("expected three distinct real roots with exactly one >= k" + where);
        r.structure = PsiStructure::ThreeDistinctOneAboveK;
    } else {
        if (r.roots_at_or_above_k != 1) throw StructureViolation("expected exactly one root >= k" + where);
        r.structure = PsiStructure::MonotoneAboveK;
    }
    return r;
}

EllBound ell_bound(int e) {
    if (e < 5) throw InvalidArgument("ell_e needs e >= 5");
    const auto p = edge_params(e);
    if (p.t == 0) throw InvalidRegime("ell_e bound applies only when t_e >= 1");
    const Rational ell = make_rational(Integer(e) * p.k, Integer(e - p.k - 1));
    const Rational r = ell * (ell + 1) * (ell * ell - ell - 2 * e) / (ell * ell - e);
    return {ell, Rational(e + 2) + r};
}

RangeCheckReport corollary_range_check(int e_lo, int e_hi) {
    if (e_lo < 86 || e_hi > 350 || e_lo > e_hi) throw InvalidArgument("range must satisfy 86 <= e_lo <= e_hi <= 350");
    RangeCheckReport rep;
    for (int e = e_lo; e <= e_hi; ++e) {
        const auto p = edge_params(e);
        RangeCheckEntry ent;
        ent.e = e;
        ent.k = p.k;
        ent.t = p.t;
        if (p.t == 0) {
            ent.status = RangeCheckEntry::Status::Skipped;
            ent.reason = "t = 0: covered by the closed form f(k)";
            ++rep.skipped;
            rep.entries.push_back(std::move(ent));
            continue;
        }
        const auto eb = ell_bound(e);
        ent.bound = eb.bound;
        // bound < e + 2 + 13 sqrt(e)  <=>  B < 13 sqrt(e) with B = bound - e - 2.
        const Rational b = eb.bound - (e + 2);
        const bool ok = b < 0 || b * b < Rational(169 * e);
        if (ok) {
            ent.status = RangeCheckEntry::Status::Pass;
            ++rep.passed;
        } else {
            ent.status = RangeCheckEntry::Status::Fail;
            ent.reason = "bound is not below e + 2 + 13 sqrt(e)";
            ++rep.failed;
        }
        rep.entries.push_back(std::move(ent));
    }
    return rep;
}

}  // namespace threshcert
