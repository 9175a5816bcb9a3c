#include "threshcert/exactpoly.hpp"

#include "threshcert/errors.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace threshcert {

namespace {

int sgn(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

std::strong_ordering order_of(const Rational& a, const Rational& b) {
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Rational floor_q(const Rational& r) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rational(f);
}

Integer ceil_z(const Rational& r) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return c;
}

std::size_t bit_length(const Integer& v) { return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
    std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[i];
}

const Integer& IntPoly::lead() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return c_.back();
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::content_free() const {
    if (c_.empty()) return {};
    const Integer g = content();
    if (g == 1) return *this;
    IntPoly r = *this;
    for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::primitive() const {
    IntPoly r = content_free();
    if (!r.c_.empty() && r.c_.back() < 0) r = -r;
    return r;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

int IntPoly::sign_at(const Rational& x) const {
    if (c_.empty()) return 0;
    // q^d p(n/q) evaluated homogeneously in integers; q > 0.
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = c_.back();
    Integer qpow = 1;
    for (int i = degree() - 1; i >= 0; --i) {
        qpow *= den;
        acc *= num;
        acc += c_[i] * qpow;
    }
    return sgn(acc);
}

int IntPoly::sign_at_pos_inf() const { return c_.empty() ? 0 : sgn(c_.back()); }

int IntPoly::sign_at_neg_inf() const {
    if (c_.empty()) return 0;
    const int s = sgn(c_.back());
    return (degree() % 2 == 0) ? s : -s;
}

int IntPoly::trailing_zeros() const {
    int z = 0;
    while (z < static_cast<int>(c_.size()) && c_[z] == 0) ++z;
    return z;
}

std::string IntPoly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = c_[i];
        if (a == 0) continue;
        Integer mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
}

// ---------------------------------------------------------------- division and gcd

IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial("pseudo-remainder by the zero polynomial");
    const int db = b.degree();
    const Integer lb = b.lead();
    const int s = sgn(lb);
    const Integer alb = abs(lb);
    std::vector<Integer> r = a.coeffs();
    int dr = a.degree();
    while (dr >= db) {
        const Integer lr = r[dr];
        const int shift = dr - db;
        if (lr == 0) {
            --dr;
            continue;
        }
        for (int i = 0; i <= dr; ++i) r[i] *= alb;
        const Integer f = s > 0 ? lr : Integer(-lr);
        for (int i = 0; i <= db; ++i) mpz_submul(r[i + shift].get_mpz_t(), f.get_mpz_t(), b.coeffs()[i].get_mpz_t());
        --dr;
    }
    r.resize(static_cast<std::size_t>(std::max(dr + 1, 0)));
    return IntPoly(std::move(r));
}

namespace {

// Long division over Q; returns quotient coefficients, throws if remainder != 0.
std::vector<Rational> rational_quotient(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (a.is_zero()) return {};
    const int da = a.degree(), db = b.degree();
    if (da < db) throw InvalidArgument("polynomial division is not exact");
    std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> q(static_cast<std::size_t>(da - db) + 1);
    const Rational lb(b.lead());
    for (int i = da - db; i >= 0; --i) {
        const Rational qi = r[i + db] / lb;
        q[i] = qi;
        if (qi == 0) continue;
        for (int j = 0; j <= db; ++j) r[i + j] -= qi * Rational(b.coeffs()[j]);
    }
    for (const auto& v : r)
        if (v != 0) throw InvalidArgument("polynomial division is not exact");
    return q;
}

}  // namespace

IntPoly exact_quotient_primitive(const IntPoly& a, const IntPoly& b) {
    auto q = rational_quotient(a, b);
    Integer l = 1;
    for (const auto& v : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> c;
    c.reserve(q.size());
    for (const auto& v : q) {
        Rational s = v * Rational(l);
        c.push_back(s.get_num());
    }
    return IntPoly(std::move(c)).primitive();
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
    auto q = rational_quotient(a, b);
    std::vector<Integer> c;
    c.reserve(q.size());
    for (const auto& v : q) {
        if (v.get_den() != 1) throw InvalidArgument("quotient is not integral");
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    IntPoly x = a.content_free(), y = b.content_free();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return IntPoly{1};
        IntPoly r = signed_pseudo_remainder(x, y);
        x = std::move(y);
        y = r.content_free();
    }
    return x.primitive();
}

IntPoly square_free_part(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("square-free part of the zero polynomial");
    const IntPoly pp = p.primitive();
    if (pp.degree() <= 0) return IntPoly{1};
    const IntPoly g = gcd(pp, pp.derivative());
    return exact_quotient_primitive(pp, g);
}

std::vector<IntPoly> square_free_factorization(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("square-free factorization of the zero polynomial");
    const IntPoly pp = p.primitive();
    if (pp.degree() <= 0) return {};
    IntPoly c = gcd(pp, pp.derivative());
    IntPoly w = exact_quotient_primitive(pp, c);
    std::vector<IntPoly> out;
    while (true) {
        if (c.degree() <= 0) {
            out.push_back(w);
            break;
        }
        IntPoly y = gcd(w, c);
        out.push_back(exact_quotient_primitive(w, y));
        w = y;
        c = exact_quotient_primitive(c, y);
    }
    return out;
}

// ---------------------------------------------------------------- charpoly

SquareMatrix::SquareMatrix(int n, std::vector<std::int64_t> row_major) : n_(n), a_(std::move(row_major)) {
    if (n < 0 || a_.size() != static_cast<std::size_t>(n) * n) throw InvalidArgument("matrix is not square");
}

IntPoly charpoly(const SquareMatrix& a) {
    const int n = a.size();
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
    c[n] = 1;
    if (n == 0) return IntPoly(std::move(c));
    auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    // M_1 = I; c_{n-k} = -tr(A M_k) / k; M_{k+1} = A M_k + c_{n-k} I.
    std::vector<Integer> m(static_cast<std::size_t>(n) * n, 0), am(m.size());
    for (int i = 0; i < n; ++i) m[idx(i, i)] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Integer s = 0;
                for (int l = 0; l < n; ++l) {
                    const std::int64_t v = a.at(i, l);
                    if (v == 0) continue;
                    if (v == 1)
                        s += m[idx(l, j)];
                    else
                        s += m[idx(l, j)] * static_cast<long>(v);
                }
                am[idx(i, j)] = std::move(s);
            }
        Integer tr = 0;
        for (int i = 0; i < n; ++i) tr += am[idx(i, i)];
        Integer ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -ck;
        std::swap(m, am);
        for (int i = 0; i < n; ++i) m[idx(i, i)] += c[n - k];
    }
    return IntPoly(std::move(c));
}

// ---------------------------------------------------------------- intervals

namespace {

RationalInterval mul(const RationalInterval& a, const RationalInterval& b) {
    const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

}  // namespace

RationalInterval eval_interval(const IntPoly& p, const RationalInterval& iv) {
    if (p.is_zero()) return {0, 0};
    if (iv.lo == iv.hi) {
        const Rational v = p.eval(iv.lo);
        return {v, v};
    }
    RationalInterval acc{Rational(p.lead()), Rational(p.lead())};
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc = mul(acc, iv);
        acc.lo += p.coeffs()[i];
        acc.hi += p.coeffs()[i];
    }
    return acc;
}

// ---------------------------------------------------------------- Sturm

SturmSequence::SturmSequence(const IntPoly& square_free) {
    if (square_free.is_zero()) throw ZeroPolynomial("Sturm sequence of the zero polynomial");
    seq_.push_back(square_free.content_free());
    if (square_free.degree() == 0) return;
    seq_.push_back(seq_[0].derivative().content_free());
    while (true) {
        IntPoly r = -signed_pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
        if (r.is_zero()) break;
        seq_.push_back(r.content_free());
        if (seq_.back().degree() == 0) break;
    }
}

namespace {

template <class SignFn>
int count_variations(std::size_t n, SignFn sign) {
    int v = 0, prev = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int s = sign(i);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
    return count_variations(seq_.size(), [&](std::size_t i) { return seq_[i].sign_at(x); });
}

int SturmSequence::variations_at_pos_inf() const {
    return count_variations(seq_.size(), [&](std::size_t i) { return seq_[i].sign_at_pos_inf(); });
}

int SturmSequence::variations_at_neg_inf() const {
    return count_variations(seq_.size(), [&](std::size_t i) { return seq_[i].sign_at_neg_inf(); });
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
    if (hi <= lo) return 0;
    return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

int SturmSequence::count_above(const Rational& lo) const { return variations_at(lo) - variations_at_pos_inf(); }

int sturm_count(const IntPoly& p, const RationalInterval& iv) {
    if (p.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    return SturmSequence(square_free_part(p)).count(iv.lo, iv.hi);
}

Integer root_bound(const IntPoly& p) {
    if (p.degree() <= 0) return 1;
    Integer m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Integer(abs(p.coeffs()[i])));
    const Rational cauchy = Rational(1) + make_rational(m, abs(p.lead()));
    const Integer c = ceil_z(cauchy) + 1;
    Integer b = 1;
    while (b < c) b *= 2;
    return b;
}

// ---------------------------------------------------------------- AlgebraicReal

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
    IntPoly p(std::vector<Integer>{-r.get_num(), r.get_den()});
    return AlgebraicReal(p, r, r);
}

AlgebraicReal::AlgebraicReal(IntPoly square_free, Rational lo, Rational hi)
    : poly_(std::move(square_free)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (poly_.degree() < 1) throw InvalidArgument("defining polynomial must be non-constant");
    if (hi_ < lo_) throw InvalidArgument("isolating interval is reversed");
}

std::optional<Rational> AlgebraicReal::exact_value() const {
    if (is_exact()) return lo_;
    return std::nullopt;
}

void AlgebraicReal::bisect() {
    if (is_exact()) return;
    const Rational m = (lo_ + hi_) / 2;
    const int s = poly_.sign_at(m);
    if (s == 0) {
        lo_ = hi_ = m;
        return;
    }
    if (s == poly_.sign_at(lo_))
        lo_ = m;
    else
        hi_ = m;
}

AlgebraicReal AlgebraicReal::refined(const Rational& max_width, int budget) const {
    AlgebraicReal r = *this;
    int used = 0;
    while (r.hi_ - r.lo_ > max_width) {
        if (used++ >= budget) throw RefinementBudgetExceeded("refinement budget exhausted while narrowing an isolating interval");
        r.bisect();
    }
    return r;
}

AlgebraicReal AlgebraicReal::rationalized(int budget) const {
    if (is_exact()) return *this;
    if (poly_.degree() == 1) {
        const Rational v(-poly_.coeffs()[0], poly_.coeffs()[1]);
        return from_rational(v);
    }
    // A rational root p/q of a primitive polynomial has q | lead. Two distinct
    // rationals with denominators <= L differ by at least 1/L^2, so once the
    // width is below that the simplest rational in the interval is the only
    // candidate.
    const Integer lead = abs(poly_.content_free().lead());
    const Rational target = make_rational(1, lead * lead + 1);
    const int extra = static_cast<int>(2 * bit_length(lead) + bit_length(ceil_z(hi_ - lo_)) + 4);
    AlgebraicReal r = refined(target, budget + extra);
    if (r.is_exact()) return r;
    const Rational cand = simplest_rational_between(r.lo_, r.hi_);
    if (cand.get_den() <= lead && r.poly_.sign_at(cand) == 0) return from_rational(cand);
    return r;
}

bool AlgebraicReal::is_rational(int budget) const { return rationalized(budget).is_exact(); }

double AlgebraicReal::approx() const { return Rational((lo_ + hi_) / 2).get_d(); }

// ---------------------------------------------------------------- root isolation

namespace {

// Top `want` roots (descending) of a square-free primitive polynomial.
std::vector<AlgebraicReal> isolate_top(const IntPoly& f, int want, int budget) {
    std::vector<AlgebraicReal> out;
    if (f.degree() < 1 || want <= 0) return out;
    const SturmSequence sturm(f);
    const Integer bound = root_bound(f);
    const Rational floor_lo(-bound);
    const int v_floor = sturm.variations_at(floor_lo);
    Rational upper(bound);
    int v_upper = sturm.variations_at(upper);
    const int limit = budget + static_cast<int>(bit_length(bound)) + 64;
    while (static_cast<int>(out.size()) < want && v_floor - v_upper > 0) {
        Rational lo = floor_lo, hi = upper;
        int v_lo = v_floor, v_hi = v_upper;
        int steps = 0;
        while (v_lo - v_hi > 1) {
            if (steps++ > limit) throw RefinementBudgetExceeded("root isolation budget exhausted");
            const Rational m = (lo + hi) / 2;
            const int v_m = sturm.variations_at(m);
            if (v_m - v_hi >= 1) {
                lo = m;
                v_lo = v_m;
            } else {
                hi = m;
                v_hi = v_m;
            }
        }
        const Rational next_upper = lo;
        const int next_v = v_lo;
        if (f.sign_at(hi) == 0) {
            out.emplace_back(f, hi, hi);
        } else {
            // lo may be the next smaller root; shrink until it is not.
            bool exact = false;
            while (f.sign_at(lo) == 0) {
                if (steps++ > limit) throw RefinementBudgetExceeded("root isolation budget exhausted");
                const Rational m = (lo + hi) / 2;
                const int v_m = sturm.variations_at(m);
                if (v_m - v_hi == 1) {
                    lo = m;
                } else {
                    hi = m;
                    if (f.sign_at(hi) == 0) {
                        exact = true;
                        break;
                    }
                }
            }
            if (exact)
                out.emplace_back(f, hi, hi);
            else
                out.emplace_back(f, lo, hi);
        }
        upper = next_upper;
        v_upper = next_v;
    }
    return out;
}

std::vector<RootWithMultiplicity> merged_top_roots(const IntPoly& p, int want, int budget) {
    if (p.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
    std::vector<RootWithMultiplicity> all;
    const auto factors = square_free_factorization(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const int mult = static_cast<int>(i) + 1;
        // A factor of multiplicity m needs at most ceil(want / m) roots.
        const int need = want == INT_MAX ? INT_MAX : (want + mult - 1) / mult;
        for (auto& r : isolate_top(factors[i], need, budget)) all.push_back({std::move(r), mult});
    }
    std::sort(all.begin(), all.end(), [budget](const RootWithMultiplicity& a, const RootWithMultiplicity& b) {
        return compare(a.root, b.root, budget) == std::strong_ordering::greater;
    });
    return all;
}

}  // namespace

std::optional<AlgebraicReal> kth_largest_root(const IntPoly& p, int k, int budget) {
    if (p.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
    if (k < 1) throw InvalidArgument("root rank must be >= 1");
    int seen = 0;
    for (auto& r : merged_top_roots(p, k, budget)) {
        seen += r.multiplicity;
        if (seen >= k) return std::move(r.root);
    }
    return std::nullopt;
}

std::vector<RootWithMultiplicity> real_roots(const IntPoly& p, int budget) { return merged_top_roots(p, INT_MAX, budget); }

// ---------------------------------------------------------------- comparison

std::strong_ordering compare(const AlgebraicReal& a, const Rational& r, int budget) {
    if (a.is_exact()) return order_of(a.lo(), r);
    AlgebraicReal x = a;
    if (r > x.lo() && r < x.hi() && x.defpoly().sign_at(r) == 0) return std::strong_ordering::equal;
    for (int used = 0;; ++used) {
        if (x.is_exact()) return order_of(x.lo(), r);
        if (r <= x.lo()) return std::strong_ordering::greater;
        if (r >= x.hi()) return std::strong_ordering::less;
        if (used >= budget) throw RefinementBudgetExceeded("budget exhausted comparing an algebraic number with a rational");
        x.bisect();
    }
}

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b, int budget) {
    if (b.is_exact()) return compare(a, b.lo(), budget);
    if (a.is_exact()) return 0 <=> compare(b, a.lo(), budget);
    AlgebraicReal x = a, y = b;
    bool equality_tested = false;
    for (int used = 0;; ++used) {
        if (x.is_exact()) return 0 <=> compare(y, x.lo(), budget);
        if (y.is_exact()) return compare(x, y.lo(), budget);
        if (x.hi() <= y.lo()) return std::strong_ordering::less;
        if (y.hi() <= x.lo()) return std::strong_ordering::greater;
        if (!equality_tested) {
            equality_tested = true;
            const IntPoly g = gcd(x.defpoly(), y.defpoly());
            if (g.degree() >= 1) {
                // Roots of g inside either isolating interval can only be the
                // isolated number itself, so a root of g in the intersection
                // means x == y.
                const Rational lo = std::max(x.lo(), y.lo());
                const Rational hi = std::min(x.hi(), y.hi());
                if (lo < hi && SturmSequence(g).count(lo, hi) >= 1) return std::strong_ordering::equal;
            }
        }
        if (used >= budget) throw RefinementBudgetExceeded("budget exhausted comparing two algebraic numbers");
        if (x.hi() - x.lo() >= y.hi() - y.lo())
            x.bisect();
        else
            y.bisect();
    }
}

int sign_at(const IntPoly& p, const Rational& x) { return p.sign_at(x); }

int sign_at(const IntPoly& p, const AlgebraicReal& x, int budget) {
    if (p.is_zero()) return 0;
    if (x.is_exact()) return p.sign_at(x.lo());
    const IntPoly g = gcd(p, x.defpoly());
    if (g.degree() >= 1 && SturmSequence(g).count(x.lo(), x.hi()) >= 1) return 0;
    AlgebraicReal y = x;
    for (int used = 0;; ++used) {
        if (y.is_exact()) return p.sign_at(y.lo());
        const auto enc = eval_interval(p, y.interval());
        if (enc.lo > 0) return 1;
        if (enc.hi < 0) return -1;
        if (used >= budget) throw RefinementBudgetExceeded("budget exhausted deciding a sign at an algebraic point");
        y.bisect();
    }
}

RationalInterval eval_ratfun(const IntPoly& num, const IntPoly& den, const AlgebraicReal& x, const Rational& eps,
                             int budget) {
    if (den.is_zero()) throw PoleAtPoint("denominator is the zero polynomial");
    if (sign_at(den, x, budget) == 0) throw PoleAtPoint("denominator vanishes at the evaluation point");
    AlgebraicReal y = x;
    for (int used = 0;; ++used) {
        if (y.is_exact()) {
            const Rational v = num.eval(y.lo()) / den.eval(y.lo());
            return {v, v};
        }
        const auto d = eval_interval(den, y.interval());
        if (d.lo > 0 || d.hi < 0) {
            const auto n = eval_interval(num, y.interval());
            const Rational q1 = n.lo / d.lo, q2 = n.lo / d.hi, q3 = n.hi / d.lo, q4 = n.hi / d.hi;
            RationalInterval q{std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4})};
            if (q.width() <= eps) return q;
        }
        if (used >= budget) throw RefinementBudgetExceeded("budget exhausted enclosing a rational function value");
        y.bisect();
    }
}

// ---------------------------------------------------------------- rationals

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) throw InvalidArgument("empty interval");
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return -simplest_rational_between(-hi, -lo);
    const Rational fl = floor_q(lo);
    if (fl == lo) return fl;
    if (fl + 1 <= hi) return fl + 1;
    const Rational inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
    return fl + 1 / inner;
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
        throw InvalidArgument("not a rational number: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_decimal(const Rational& r, int digits, bool round_up) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const Rational scaled = r * Rational(scale);
    Integer n;
    if (round_up)
        mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    else
        mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const bool neg = n < 0;
    std::string s = Integer(abs(n)).get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return neg ? "-" + s : s;
}

}  // namespace threshcert
