#include "threshcert/certify.hpp"

#include "threshcert/errors.hpp"
#include "threshcert/tsubenum.hpp"

#include <chrono>
#include <exception>
#include <thread>

namespace threshcert {

namespace {

int sgn(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

IntPoly lin(long c0) { return IntPoly{c0, 1}; }

IntPoly power(const IntPoly& p, int k) {
    IntPoly r{1};
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

// Removes the factors lambda and lambda + 1. Their roots 0 and -1 lie below
// every rho(T_1) this module compares against. The sign of the leading
// coefficient is kept.
IntPoly strip_trivial_roots(IntPoly p) {
    if (p.is_zero()) return p;
    const int z = p.trailing_zeros();
    if (z > 0) p = IntPoly(std::vector<Integer>(p.coeffs().begin() + z, p.coeffs().end()));
    while (p.degree() >= 1 && p.sign_at(Rational(-1)) == 0) {
        // synthetic division by (lambda + 1)
        const auto& c = p.coeffs();
        const int d = p.degree();
        std::vector<Integer> q(static_cast<std::size_t>(d));
        Integer carry = 0;
        for (int i = d; i >= 1; --i) {
            carry = c[i] - carry;
            q[i - 1] = carry;
        }
        p = IntPoly(std::move(q));
    }
    return p.content_free();
}

std::string steps_label(const StepSequence& s) { return "candidate " + s.to_string(); }

Integer ceil_q(const Rational& r) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return c;
}

Integer floor_q(const Rational& r) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f;
}

enum class Decision { Pass, Fail, Undecided };

// Integer coverage test on enclosures. With a small V root every n >= e + 2
// is covered, otherwise every n > n_L. The D side covers b <= n < n_U.
Decision coverage_decision(VBranch v, const RationalInterval& nu, const RationalInterval& nl, int e) {
    if (v == VBranch::SmallRoot) {
        if (nu.lo > e + 1) return Decision::Pass;
        if (nu.hi <= e + 1) return Decision::Fail;
        return Decision::Undecided;
    }
    if (ceil_q(nu.lo) > floor_q(nl.hi)) return Decision::Pass;
    if (ceil_q(nu.hi) <= floor_q(nl.lo)) return Decision::Fail;
    return Decision::Undecided;
}

RationalInterval shifted(const RationalInterval& iv, const Rational& by) { return {iv.lo + by, iv.hi + by}; }

}  // namespace

// ---------------------------------------------------------------- charpolys

IntPoly graph_charpoly(const DenseGraph& g) { return charpoly(SquareMatrix(g.order(), g.row_major())); }

IntPoly threshold_charpoly(const DenseGraph& g) {
    const int n = g.order();
    if (n == 0) return IntPoly{1};
    const auto deg = g.degrees();
    std::vector<int> cell_of(n), start;
    for (int v = 0; v < n; ++v) {
        if (v == 0 || deg[v] != deg[v - 1]) start.push_back(v);
        cell_of[v] = static_cast<int>(start.size()) - 1;
    }
    const int m = static_cast<int>(start.size());
    std::vector<int> size(m, 0);
    for (int v = 0; v < n; ++v) ++size[cell_of[v]];
    int zeros = 0, minus_ones = 0;
    for (int c = 0; c < m; ++c) {
        if (size[c] < 2) continue;
        const int a = start[c];
        const bool adjacent = g.edge(a, a + 1);
        for (int u = a; u + 1 < a + size[c]; ++u) {
            if (g.edge(u, u + 1) != adjacent) return graph_charpoly(g);
            for (int w = 0; w < n; ++w)
                if (w != u && w != u + 1 && g.edge(u, w) != g.edge(u + 1, w)) return graph_charpoly(g);
        }
        (adjacent ? minus_ones : zeros) += size[c] - 1;
    }
    if (m == n) return graph_charpoly(g);
    SquareMatrix quot(m);
    for (int c = 0; c < m; ++c)
        for (int w = 0; w < n; ++w)
            if (g.edge(start[c], w)) ++quot.at(c, cell_of[w]);
    return charpoly(quot) * IntPoly::monomial(1, zeros) * power(lin(1), minus_ones);
}

TsubPolys tsub_polys(const StepSequence& steps) {
    if (steps.empty()) throw Degenerate("T-subgraph is undefined for e = 0");
    TsubPolys p;
    p.p_t = threshold_charpoly(tsub_adjacency(steps));
    p.p_t1 = threshold_charpoly(tsub_join_adjacency(steps));
    p.order_t = steps.tsub_order();
    return p;
}

IntPoly q_poly(const TsubPolys& g1, const TsubPolys& g2) {
    IntPoly q = IntPoly::x() * (g1.p_t1 * g2.p_t - g2.p_t1 * g1.p_t);
    q += Integer(g1.order_t - g2.order_t) * (g1.p_t * g2.p_t);
    return q;
}

IntPoly q_poly(const StepSequence& g1, const StepSequence& g2) {
    if (g1.sum() != g2.sum()) throw InvalidArgument("step sequences encode different e");
    return q_poly(tsub_polys(g1), tsub_polys(g2));
}

RationalFunction r_generic(const StepSequence& steps) {
    const auto p = tsub_polys(steps);
    return {IntPoly::x() * p.p_t1, p.p_t};
}

RDClosedForm r_D_closed_form(int e) {
    const auto p = edge_params(e);
    if (p.t == 0) throw InvalidRegime("closed form for R_D needs t_e >= 1");
    const long k = p.k, t = p.t;
    RDClosedForm r;
    r.cubic = IntPoly{(t + 1) * (k - t - 1), -(k + t + 1), -(k - 1), 1};
    r.num = IntPoly{0, 1} * lin(1) * r.cubic;
    r.den = IntPoly{t * (k - t - 1), -(k + t - 1), -(k - 2), 1};
    return r;
}

RVClosedForm r_V_closed_form(int e) {
    if (e < 1) throw InvalidArgument("closed form for R_V needs e >= 1");
    RVClosedForm r;
    r.quadratic = IntPoly{-2L * e, -1, 1};
    r.num = IntPoly{0, 1} * lin(1) * r.quadratic;
    r.den = IntPoly{-static_cast<long>(e), 0, 1};
    return r;
}

bool same_rational_function(const RationalFunction& a, const RationalFunction& b) {
    if (a.den.is_zero() || b.den.is_zero()) throw ZeroPolynomial("rational function with zero denominator");
    return a.num * b.den == b.num * a.den;
}

IntPoly threshold_rho_poly(const StepSequence& steps, int n) {
    if (steps.empty()) throw Degenerate("T-subgraph is undefined for e = 0");
    const int n_prime = steps.first() + 2;
    if (n < n_prime) throw OrderTooSmall("order " + std::to_string(n) + " is below s_1 + 2");
    const auto p = tsub_polys(steps);
    return IntPoly::x() * p.p_t1 - Integer(n - n_prime) * p.p_t;
}

AlgebraicReal rho_of_threshold(const StepSequence& steps, int n, int budget) {
    auto r = kth_largest_root(strip_trivial_roots(threshold_rho_poly(steps, n)), 1, budget);
    if (!r) throw StructureViolation("spectral radius polynomial has no real root");
    return *r;
}

AlgebraicReal rho_tsub_join(const StepSequence& steps, int budget) {
    auto r = kth_largest_root(strip_trivial_roots(tsub_polys(steps).p_t1), 1, budget);
    if (!r) throw StructureViolation("characteristic polynomial has no real root");
    return *r;
}

// ---------------------------------------------------------------- enums

std::string to_string(DBranch b) {
    switch (b) {
        case DBranch::PositiveLeading: return "PositiveLeading";
        case DBranch::NegativeLeadingWithBound: return "NegativeLeadingWithBound";
        case DBranch::Skipped: return "Skipped";
    }
    return "";
}

std::string to_string(VBranch b) {
    switch (b) {
        case VBranch::SmallRoot: return "SmallRoot";
        case VBranch::BoundAtNL: return "BoundAtNL";
        case VBranch::Unused: return "Unused";
    }
    return "";
}

std::string to_string(Coverage c) { return c == Coverage::AllN ? "AllN" : "Split"; }

DBranch parse_dbranch(const std::string& s) {
    if (s == "PositiveLeading") return DBranch::PositiveLeading;
    if (s == "NegativeLeadingWithBound") return DBranch::NegativeLeadingWithBound;
    if (s == "Skipped") return DBranch::Skipped;
    throw InvalidArgument("unknown d_branch '" + s + "'");
}

VBranch parse_vbranch(const std::string& s) {
    if (s == "SmallRoot") return VBranch::SmallRoot;
    if (s == "BoundAtNL") return VBranch::BoundAtNL;
    if (s == "Unused") return VBranch::Unused;
    throw InvalidArgument("unknown v_branch '" + s + "'");
}

Coverage parse_coverage(const std::string& s) {
    if (s == "AllN") return Coverage::AllN;
    if (s == "Split") return Coverage::Split;
    throw InvalidArgument("unknown coverage '" + s + "'");
}

// ---------------------------------------------------------------- certification

std::shared_ptr<const CertifyContext> make_context(int e) {
    if (e < 4) throw InvalidArgument("certification needs e >= 4");
    const auto p = edge_params(e);
    if (p.t == 0) throw InvalidRegime("t_e = 0: covered by closed form (Bell)");
    auto rd = r_D_closed_form(e);
    auto rv = r_V_closed_form(e);
    auto xi_d = kth_largest_root(rd.cubic, 1);
    auto xi_v = kth_largest_root(rv.quadratic, 1);
    auto ctx = std::make_shared<CertifyContext>(CertifyContext{
        p, d_steps(e), tsub_polys(d_steps(e)), tsub_polys(v_steps(e)), std::move(rd), std::move(rv), *xi_d, *xi_v});
    return ctx;
}

Certificate certify_candidate(const CertifyContext& ctx, const StepSequence& steps, const CertifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const int e = ctx.params.e;
    if (steps.sum() != e) throw InvalidArgument(steps_label(steps) + " does not sum to e = " + std::to_string(e));
    if (is_extremal_tsub(e, steps)) throw ExcludedCandidate(steps_label(steps) + " is an extremal T-subgraph");
    const int budget = opt.budget;
    const std::string who = steps_label(steps) + " at e = " + std::to_string(e);

    Certificate cert;
    cert.e = e;
    cert.steps = steps;
    auto finish = [&]() {
        if (opt.timing)
            cert.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return cert;
    };

    const TsubPolys g = tsub_polys(steps);

    // (2)
    const IntPoly qd = q_poly(g, ctx.d_polys);
    if (qd.is_zero()) throw VerificationFailed(2, "Q_{G,D} is identically zero for " + who);
    const IntPoly qd_core = strip_trivial_roots(qd);

    if (sgn(qd.lead()) > 0) {
        // (3)
        auto r = kth_largest_root(qd_core, 1, budget);
        if (r && compare(*r, ctx.xi_d, budget) != std::strong_ordering::less)
            throw VerificationFailed(3, "rho(Q_{G,D}) >= rho(T_1(D)) for " + who);
        cert.d_branch = DBranch::PositiveLeading;
        cert.coverage = Coverage::AllN;
        cert.rho_qd = std::move(r);
        return finish();
    }

    // (4)
    auto r1 = kth_largest_root(qd_core, 1, budget);
    if (!r1 || compare(ctx.xi_d, *r1, budget) != std::strong_ordering::less)
        throw VerificationFailed(4, "rho(T_1(D)) < rho(Q_{G,D}) fails for " + who);
    auto r2 = kth_largest_root(qd_core, 2, budget);
    if (r2 && compare(*r2, ctx.xi_d, budget) != std::strong_ordering::less)
        throw VerificationFailed(4, "rho_2(Q_{G,D}) < rho(T_1(D)) fails for " + who);
    cert.d_branch = DBranch::NegativeLeadingWithBound;
    cert.coverage = Coverage::Split;

    // (5) / (6)
    const IntPoly qv = q_poly(g, ctx.v_polys);
    if (qv.is_zero() || sgn(qv.lead()) < 0)
        throw VerificationFailed(5, "Q_{G,V} is not a nonzero polynomial with positive leading coefficient for " + who);
    auto rv = kth_largest_root(strip_trivial_roots(qv), 1, budget);
    const bool small = !rv || compare(*rv, ctx.xi_v, budget) == std::strong_ordering::less;
    cert.v_branch = small ? VBranch::SmallRoot : VBranch::BoundAtNL;

    // (7)
    const Rational b(ctx.params.b), e2(e + 2);
    AlgebraicReal xu = *r1;
    std::optional<AlgebraicReal> xl;
    if (!small) xl = *rv;
    RationalInterval nu, nl{e2, e2};
    bool tried_rational = false;
    const int rounds = budget / 8 + 1;
    for (int round = 0;; ++round) {
        const Rational eps(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(4 + 8 * round));
        xu = xu.refined(eps, budget);
        nu = shifted(eval_ratfun(ctx.rd.num, ctx.rd.den, xu, eps, budget), b);
        if (xl) {
            xl = xl->refined(eps, budget);
            nl = shifted(eval_ratfun(ctx.rv.num, ctx.rv.den, *xl, eps, budget), e2);
        }
        const auto d = coverage_decision(cert.v_branch, nu, nl, e);
        if (d == Decision::Pass) break;
        if (d == Decision::Fail) throw VerificationFailed(7, "an integer n lies in [n_U, n_L] for " + who);
        if (round >= 2 && !tried_rational) {
            // Exact rational roots give exact bounds; this resolves integer ties.
            tried_rational = true;
            xu = xu.rationalized(budget);
            if (xl) xl = xl->rationalized(budget);
        }
        if (round >= rounds)
            throw RefinementBudgetExceeded("step 7 undecided within budget (possible tie n_U = n_L) for " + who);
    }
    cert.n_U = nu;
    cert.n_L = nl;
    cert.rho_qd = *r1;
    cert.rho_qv = std::move(rv);
    return finish();
}

Certificate certify_candidate(int e, const StepSequence& steps, const CertifyOptions& opt) {
    return certify_candidate(*make_context(e), steps, opt);
}

std::uint64_t certify_stream(int e, const CertifyAllOptions& opt, const std::function<void(const Certificate&)>& sink) {
    const auto ctx = make_context(e);
    CandidateStream stream = opt.resume_after ? CandidateStream::resume_after(e, *opt.resume_after) : CandidateStream(e);
    std::uint64_t emitted = 0;
    const std::size_t batch_size = std::max<std::size_t>(opt.batch, 1);
    const int jobs = std::max(opt.jobs, 1);
    while (true) {
        std::vector<StepSequence> batch;
        while (batch.size() < batch_size) {
            if (opt.stop_after != 0 && emitted + batch.size() >= opt.stop_after) break;
            auto s = stream.next();
            if (!s) break;
            if (!is_extremal_tsub(e, *s)) batch.push_back(std::move(*s));
        }
        if (batch.empty()) break;

        std::vector<std::optional<Certificate>> out(batch.size());
        std::vector<std::exception_ptr> err(batch.size());
        auto work = [&](std::size_t i) {
            try {
                out[i] = certify_candidate(*ctx, batch[i], opt.candidate);
            } catch (...) {
                err[i] = std::current_exception();
            }
        };
        if (jobs == 1 || batch.size() == 1) {
            for (std::size_t i = 0; i < batch.size(); ++i) work(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> pool;
            const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), batch.size());
            for (std::size_t w = 0; w < nthreads; ++w)
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) work(i);
                });
        }
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (err[i]) std::rethrow_exception(err[i]);
            sink(*out[i]);
            ++emitted;
        }
        if (opt.progress) opt.progress(emitted, batch.back().first());
    }
    return emitted;
}

std::vector<Certificate> certify_all(int e, const CertifyAllOptions& opt) {
    std::vector<Certificate> out;
    certify_stream(e, opt, [&](const Certificate& c) { out.push_back(c); });
    return out;
}

// ---------------------------------------------------------------- recheck

namespace {

// The witness satisfies the isolating-interval invariant for its own
// polynomial and is the largest real root of p. Its interval may also hold
// roots of other factors of p, so it is refined until p has a single root
// above the lower endpoint.
std::string check_largest_root(const IntPoly& p, const AlgebraicReal& w, int budget, const char* name) {
    const IntPoly& d = w.defpoly();
    if (!w.is_exact() && (d.sign_at(w.lo()) * d.sign_at(w.hi()) >= 0 || sturm_count(d, w.interval()) != 1))
        return std::string(name) + " witness interval does not isolate a root";
    if (sign_at(p, w, budget) != 0) return std::string(name) + " witness is not a root";
    const SturmSequence sp(square_free_part(p));
    AlgebraicReal x = w;
    for (int used = 0;; ++used) {
        const int above = x.is_exact() ? sp.count_above(x.lo()) + 1 : sp.count_above(x.lo());
        if (above == 1) return {};
        if (used >= budget) return std::string(name) + " witness is not the largest root";
        x.bisect();
    }
}

// Checks lo <= shift + num(x)/den(x) <= hi using exact signs; den(x) > 0 is
// required and checked.
std::string check_enclosure(const RationalFunction& r, const Rational& shift, const AlgebraicReal& x,
                            const RationalInterval& iv, int budget, const char* name) {
    if (sign_at(r.den, x, budget) <= 0) return std::string(name) + " denominator is not positive at the witness";
    auto side = [&](const Rational& bound) {
        const Rational c = bound - shift;
        IntPoly f = Integer(c.get_den()) * r.num - Integer(c.get_num()) * r.den;
        return sign_at(f, x, budget);
    };
    if (side(iv.lo) < 0) return std::string(name) + " lies below its recorded enclosure";
    if (side(iv.hi) > 0) return std::string(name) + " lies above its recorded enclosure";
    return {};
}

}  // namespace

std::string recheck_certificate(const Certificate& cert, int budget) {
    try {
        const auto ctx = make_context(cert.e);
        if (cert.steps.sum() != cert.e) return "steps do not sum to e";
        if (is_extremal_tsub(cert.e, cert.steps)) return "candidate is an extremal T-subgraph";
        const TsubPolys g = tsub_polys(cert.steps);
        const IntPoly qd = q_poly(g, ctx->d_polys);
        if (qd.is_zero()) return "Q_{G,D} is identically zero";
        // Roots 0 and -1 lie below both rho(T_1) values and are dropped.
        const IntPoly qd_core = strip_trivial_roots(qd);

        if (cert.d_branch == DBranch::PositiveLeading) {
            if (sgn(qd.lead()) <= 0) return "Q_{G,D} leading coefficient is not positive";
            if (cert.coverage != Coverage::AllN) return "positive-leading branch must cover all n";
            if (!cert.rho_qd) {
                if (qd_core.degree() > 0 && SturmSequence(square_free_part(qd_core)).count_all() != 0) return "Q_{G,D} has real roots but no witness";
                return {};
            }
            if (auto m = check_largest_root(qd_core, *cert.rho_qd, budget, "rho(Q_{G,D})"); !m.empty()) return m;
            if (compare(*cert.rho_qd, ctx->xi_d, budget) != std::strong_ordering::less)
                return "rho(Q_{G,D}) is not below rho(T_1(D))";
            return {};
        }
        if (cert.d_branch != DBranch::NegativeLeadingWithBound) return "unsupported d_branch";
        if (sgn(qd.lead()) >= 0) return "Q_{G,D} leading coefficient is not negative";
        if (cert.coverage != Coverage::Split || !cert.n_U || !cert.n_L || !cert.rho_qd)
            return "split certificate is missing data";
        if (auto m = check_largest_root(qd_core, *cert.rho_qd, budget, "rho(Q_{G,D})"); !m.empty()) return m;
        if (compare(ctx->xi_d, *cert.rho_qd, budget) != std::strong_ordering::less)
            return "rho(T_1(D)) is not below rho(Q_{G,D})";
        // rho_2 < xi: the largest root is simple and no other root exceeds xi.
        if (sign_at(qd.derivative(), *cert.rho_qd, budget) == 0) return "rho(Q_{G,D}) is a multiple root";
        if (auto r2 = kth_largest_root(qd_core, 2, budget);
            r2 && compare(*r2, ctx->xi_d, budget) != std::strong_ordering::less)
            return "rho_2(Q_{G,D}) is not below rho(T_1(D))";
        if (auto m = check_enclosure({ctx->rd.num, ctx->rd.den}, Rational(ctx->params.b), *cert.rho_qd, *cert.n_U,
                                     budget, "n_U");
            !m.empty())
            return m;

        const IntPoly qv = q_poly(g, ctx->v_polys);
        if (qv.is_zero() || sgn(qv.lead()) <= 0) return "Q_{G,V} leading coefficient is not positive";
        const IntPoly qv_core = strip_trivial_roots(qv);
        const Rational e2(cert.e + 2);
        if (cert.v_branch == VBranch::SmallRoot) {
            if (cert.n_L->lo != e2 || cert.n_L->hi != e2) return "n_L must equal e + 2 in the small-root branch";
            if (cert.rho_qv) {
                if (auto m = check_largest_root(qv_core, *cert.rho_qv, budget, "rho(Q_{G,V})"); !m.empty()) return m;
                if (compare(*cert.rho_qv, ctx->xi_v, budget) != std::strong_ordering::less)
                    return "rho(Q_{G,V}) is not below rho(T_1(V))";
            } else if (qv_core.degree() > 0 && SturmSequence(square_free_part(qv_core)).count_all() != 0) {
                return "Q_{G,V} has real roots but no witness";
            }
        } else if (cert.v_branch == VBranch::BoundAtNL) {
            if (!cert.rho_qv) return "missing rho(Q_{G,V}) witness";
            if (auto m = check_largest_root(qv_core, *cert.rho_qv, budget, "rho(Q_{G,V})"); !m.empty()) return m;
            if (compare(*cert.rho_qv, ctx->xi_v, budget) == std::strong_ordering::less)
                return "rho(Q_{G,V}) is below rho(T_1(V)) but the bound branch was used";
            if (auto m = check_enclosure({ctx->rv.num, ctx->rv.den}, e2, *cert.rho_qv, *cert.n_L, budget, "n_L");
                !m.empty())
                return m;
        } else {
            return "split certificate needs a V branch";
        }
        if (coverage_decision(cert.v_branch, *cert.n_U, *cert.n_L, cert.e) != Decision::Pass)
            return "recorded enclosures do not prove integer coverage";
        return {};
    } catch (const Error& ex) {
        return ex.what();
    }
}

}  // namespace threshcert
