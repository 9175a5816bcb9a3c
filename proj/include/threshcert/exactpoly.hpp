#pragma once

// Exact univariate polynomial algebra over the integers: characteristic
// polynomials, Sturm sequences, real root isolation, exact comparison of real
// algebraic numbers and certified interval evaluation of rational functions.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace threshcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Default number of bisections a single refinement request may spend.
inline constexpr int kDefaultRefineBudget = 256;

/// Dense polynomial with integer coefficients in ascending degree order.
/// The zero polynomial has no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, int degree);
    /// The polynomial x.
    static IntPoly x();

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }
    /// Coefficient of x^i, zero beyond the degree.
    Integer coeff(int i) const;
    const Integer& lead() const;

    IntPoly derivative() const;
    /// Positive gcd of the coefficients (0 for the zero polynomial).
    Integer content() const;
    /// Divided by its content and normalised to a positive leading coefficient.
    IntPoly primitive() const;
    /// Divided by its (positive) content, keeping the sign.
    IntPoly content_free() const;

    /// Exact value at a rational point.
    Rational eval(const Rational& x) const;
    /// Exact sign of p(x).
    int sign_at(const Rational& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    /// Multiplicity of x = 0 as a root.
    int trailing_zeros() const;

    std::string to_string(char var = 'x') const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const Integer& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
    friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Integer> c_;
};

/// Pseudo-remainder scaled by a positive power of |lead(b)|, so the sign of
/// the remainder relative to a mod b is preserved.
IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Quotient a / b over Q, returned as a primitive integer polynomial. Throws
/// InvalidArgument when b does not divide a.
IntPoly exact_quotient_primitive(const IntPoly& a, const IntPoly& b);

/// Exact division a / b in Z[x]; throws InvalidArgument if not exact.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'), primitive.
IntPoly square_free_part(const IntPoly& p);

/// Factors f_1, f_2, ... with p = c * prod f_i^i, each f_i square-free and
/// primitive (possibly the constant 1).
std::vector<IntPoly> square_free_factorization(const IntPoly& p);

/// Square integer matrix in row-major order.
class SquareMatrix {
public:
    SquareMatrix() = default;
    SquareMatrix(int n, std::vector<std::int64_t> row_major);
    explicit SquareMatrix(int n) : SquareMatrix(n, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n, 0)) {}

    int size() const noexcept { return n_; }
    std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_ = 0;
    std::vector<std::int64_t> a_;
};

/// det(xI - A) by the Faddeev-LeVerrier recurrence in exact integers.
IntPoly charpoly(const SquareMatrix& a);

struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Interval enclosure of p over [iv.lo, iv.hi] by interval Horner evaluation.
RationalInterval eval_interval(const IntPoly& p, const RationalInterval& iv);

/// Sturm sequence of a square-free polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const IntPoly& square_free);

    int variations_at(const Rational& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;
    /// Distinct real roots in (lo, hi].
    int count(const Rational& lo, const Rational& hi) const;
    int count_all() const;
    /// Distinct real roots in (lo, +inf).
    int count_above(const Rational& lo) const;

    const std::vector<IntPoly>& polys() const noexcept { return seq_; }

private:
    std::vector<IntPoly> seq_;
};

/// Number of distinct real roots of p in (iv.lo, iv.hi]; square-free reduction
/// is applied internally.
int sturm_count(const IntPoly& p, const RationalInterval& iv);

/// Integer power of two strictly above the absolute value of every real root
/// (Cauchy bound 1 + max|a_i| / |a_n|, rounded up).
Integer root_bound(const IntPoly& p);

/// A real root of a square-free integer polynomial, represented by an
/// isolating interval. Either lo == hi (the root is that rational) or lo < hi,
/// the defining polynomial is nonzero at both endpoints with opposite signs
/// and has exactly one root in (lo, hi).
class AlgebraicReal {
public:
    static AlgebraicReal from_rational(const Rational& r);
    /// Trusted constructor; the caller guarantees the invariant. Use
    /// isolate() or kth_largest_root() to build from scratch.
    AlgebraicReal(IntPoly square_free, Rational lo, Rational hi);

    const IntPoly& defpoly() const noexcept { return poly_; }
    RationalInterval interval() const { return {lo_, hi_}; }
    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    bool is_exact() const { return lo_ == hi_; }
    std::optional<Rational> exact_value() const;

    /// One bisection step (no-op when exact).
    void bisect();
    /// Copy refined until the interval width is at most max_width.
    AlgebraicReal refined(const Rational& max_width, int budget = kDefaultRefineBudget) const;
    /// Decides whether the number is rational. Returns a copy collapsed to the
    /// exact value when it is; otherwise returns a copy unchanged in value.
    AlgebraicReal rationalized(int budget = kDefaultRefineBudget) const;
    bool is_rational(int budget = kDefaultRefineBudget) const;

    double approx() const;

private:
    IntPoly poly_;
    Rational lo_;
    Rational hi_;
};

/// k-th largest real root counting multiplicity (k = 1 is the largest).
/// nullopt when p has fewer than k real roots. Throws ZeroPolynomial.
std::optional<AlgebraicReal> kth_largest_root(const IntPoly& p, int k, int budget = kDefaultRefineBudget);

/// Distinct real roots with multiplicities, in decreasing order.
struct RootWithMultiplicity {
    AlgebraicReal root;
    int multiplicity;
};
std::vector<RootWithMultiplicity> real_roots(const IntPoly& p, int budget = kDefaultRefineBudget);

/// Exact trichotomy. Equality is decided through the gcd of the defining
/// polynomials, never by interval coincidence.
std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b, int budget = kDefaultRefineBudget);
std::strong_ordering compare(const AlgebraicReal& a, const Rational& r, int budget = kDefaultRefineBudget);

int sign_at(const IntPoly& p, const Rational& x);
/// Exact sign of p at an algebraic point.
int sign_at(const IntPoly& p, const AlgebraicReal& x, int budget = kDefaultRefineBudget);

/// Certified enclosure of num(x) / den(x) of width at most eps.
RationalInterval eval_ratfun(const IntPoly& num, const IntPoly& den, const AlgebraicReal& x, const Rational& eps,
                             int budget = kDefaultRefineBudget);

/// num / den in canonical form. GMP requires canonical operands, so every
/// two-argument construction goes through here.
Rational make_rational(const Integer& num, const Integer& den);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
/// Decimal rendering of r rounded toward -inf (down) or +inf (up).
std::string to_decimal(const Rational& r, int digits, bool round_up);

}  // namespace threshcert
