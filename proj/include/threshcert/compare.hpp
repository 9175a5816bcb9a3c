#pragma once

// The cubic Psi_e, its largest root psi_e, the crossover order omega_e and
// the D-versus-V classification, plus the closed form at t = 0 and the
// bound used for large e.

#include "threshcert/exactpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace threshcert {

/// Largest e for which the classification is proven.
inline constexpr int kProvenMaxE = 130;

/// Psi_e by substituting (k, t) into its four coefficient expressions. e >= 4.
IntPoly psi_poly(int e);
/// Largest real root of Psi_e.
AlgebraicReal psi_value(int e, int budget = kDefaultRefineBudget);

struct OmegaValue {
    /// Set when psi_e (hence omega_e) is rational.
    std::optional<Rational> exact;
    /// Certified enclosure; degenerate when exact.
    RationalInterval enclosure;
};
/// omega_e = e + 2 + R_V(psi_e), enclosed to width <= eps.
OmegaValue omega_value(int e, const Rational& eps = Rational(1, 1000000), int budget = kDefaultRefineBudget);

struct PsiData {
    int e = 0;
    IntPoly psi_poly;
    AlgebraicReal psi;
    OmegaValue omega;
    /// False flags a multiple largest root of Psi_e.
    bool largest_root_simple = true;
};
PsiData psi_data(int e, const Rational& eps = Rational(1, 1000000), int budget = kDefaultRefineBudget);

enum class Verdict { D_unique, Tie, V_unique };
std::string to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::D_unique;
    bool beyond_proven_range = false;
    /// False when n < e + 2 and V(n,e) does not exist.
    bool v_defined = true;
    OmegaValue omega;
};
/// Exact verdict for D(n,e) versus V(n,e). The sign of
/// num_V(psi) - (n - e - 2) den_V(psi) equals the sign of omega_e - n and is
/// decided exactly. Throws OutOfProvenRange for e > 130 unless
/// allow_extrapolation is set, and OrderTooSmall for n < b_e.
Classification classify(int n, int e, bool allow_extrapolation = false, int budget = kDefaultRefineBudget);

/// (lambda + 1)(lambda + 6)/2 + 7 + 32/(lambda - 3) + 16/(lambda - 3)^2.
Rational bell_f(const Rational& lambda);

enum class PsiStructure { ThreeDistinctOneAboveK, MonotoneAboveK };
std::string to_string(PsiStructure s);
struct PsiStructureReport {
    PsiStructure structure;
    int distinct_real_roots = 0;
    /// Distinct roots in [k, +inf).
    int roots_at_or_above_k = 0;
    bool largest_root_simple = true;
};
/// Throws StructureViolation when the expected root structure does not hold.
PsiStructureReport psi_root_structure(int e, int budget = kDefaultRefineBudget);

struct EllBound {
    Rational ell;
    Rational bound;
};
/// ell_e = e k / (e - k - 1) and e + 2 + R_V(ell_e). e >= 5, t_e >= 1.
EllBound ell_bound(int e);

struct RangeCheckEntry {
    enum class Status { Pass, Fail, Skipped };
    int e = 0;
    int k = 0;
    int t = 0;
    Status status = Status::Pass;
    std::optional<Rational> bound;
    std::string reason;
};
struct RangeCheckReport {
    std::vector<RangeCheckEntry> entries;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    bool all_pass() const { return failed == 0; }
};
/// For every e in [e_lo, e_hi] with t_e >= 1, decides bound(e) < e + 2 + 13 sqrt(e)
/// exactly by squaring. Requires 86 <= e_lo <= e_hi <= 350.
RangeCheckReport corollary_range_check(int e_lo, int e_hi);

}  // namespace threshcert
