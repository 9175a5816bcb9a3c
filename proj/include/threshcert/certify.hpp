#pragma once

// Elimination of non-extremal threshold graphs: comparison polynomials,
// the rational functions R_G, and per-candidate certificates proving that
// D(n,e) or V(n,e) has larger spectral radius for every admissible n.

#include "threshcert/exactpoly.hpp"
#include "threshcert/graphs.hpp"

#include <atomic>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace threshcert {

/// Characteristic polynomial of a threshold graph adjacency. Vertices that
/// are consecutive with equal degree are twins; the spectrum splits into the
/// quotient over twin classes plus eigenvalues 0 or -1 per class. Falls back
/// to plain Faddeev-LeVerrier when the twin check fails.
IntPoly threshold_charpoly(const DenseGraph& g);
/// Faddeev-LeVerrier on the full adjacency.
IntPoly graph_charpoly(const DenseGraph& g);

/// Characteristic polynomials of T and T v K_1 for a step sequence.
struct TsubPolys {
    IntPoly p_t;
    IntPoly p_t1;
    int order_t = 0;
};
TsubPolys tsub_polys(const StepSequence& steps);

/// Q_{G1,G2} from the T-subgraph polynomials.
IntPoly q_poly(const TsubPolys& g1, const TsubPolys& g2);
IntPoly q_poly(const StepSequence& g1, const StepSequence& g2);

struct RationalFunction {
    IntPoly num;
    IntPoly den;
};

/// R_G = lambda P_{T1} / P_T built from exact characteristic polynomials.
RationalFunction r_generic(const StepSequence& steps);

struct RDClosedForm {
    IntPoly num;
    IntPoly den;
    /// Cubic whose largest root is rho(T_1(D)).
    IntPoly cubic;
};
/// Throws InvalidRegime when t_e = 0.
RDClosedForm r_D_closed_form(int e);

struct RVClosedForm {
    IntPoly num;
    IntPoly den;
    /// lambda^2 - lambda - 2e, whose largest root is rho(T_1(V)).
    IntPoly quadratic;
};
RVClosedForm r_V_closed_form(int e);

/// True when a * d == b * c, i.e. a/b and c/d agree as rational functions.
bool same_rational_function(const RationalFunction& a, const RationalFunction& b);

/// lambda P_{T1} - (n - n') P_T with n' = s_1 + 2.
IntPoly threshold_rho_poly(const StepSequence& steps, int n);
/// Spectral radius of the threshold graph with these T-subgraph steps and order n.
AlgebraicReal rho_of_threshold(const StepSequence& steps, int n, int budget = kDefaultRefineBudget);
/// Largest root of P_{T1}.
AlgebraicReal rho_tsub_join(const StepSequence& steps, int budget = kDefaultRefineBudget);

enum class DBranch { PositiveLeading, NegativeLeadingWithBound, Skipped };
enum class VBranch { SmallRoot, BoundAtNL, Unused };
enum class Coverage { AllN, Split };

std::string to_string(DBranch b);
std::string to_string(VBranch b);
std::string to_string(Coverage c);
DBranch parse_dbranch(const std::string& s);
VBranch parse_vbranch(const std::string& s);
Coverage parse_coverage(const std::string& s);

struct Certificate {
    int e = 0;
    StepSequence steps;
    DBranch d_branch = DBranch::Skipped;
    VBranch v_branch = VBranch::Unused;
    /// Enclosure of b + R_D(rho(Q_{G,D})).
    std::optional<RationalInterval> n_U;
    /// Enclosure of e + 2 + R_V(rho(Q_{G,V})), or exactly e + 2.
    std::optional<RationalInterval> n_L;
    Coverage coverage = Coverage::AllN;
    /// Largest roots of Q_{G,D} and Q_{G,V}, kept for independent rechecks.
    std::optional<AlgebraicReal> rho_qd;
    std::optional<AlgebraicReal> rho_qv;
    std::optional<double> wall_ms;
};

/// Per-e data shared by all candidates of that e.
struct CertifyContext {
    EdgeParams params;
    StepSequence d_steps;
    TsubPolys d_polys;
    TsubPolys v_polys;
    RDClosedForm rd;
    RVClosedForm rv;
    AlgebraicReal xi_d;
    AlgebraicReal xi_v;
};
/// Throws InvalidRegime when t_e = 0 and InvalidArgument when e < 4.
std::shared_ptr<const CertifyContext> make_context(int e);

struct CertifyOptions {
    int budget = kDefaultRefineBudget;
    bool timing = false;
};

/// Runs verification steps (2)-(7) for one candidate. Throws
/// VerificationFailed, ExcludedCandidate or RefinementBudgetExceeded.
Certificate certify_candidate(const CertifyContext& ctx, const StepSequence& steps, const CertifyOptions& opt = {});
Certificate certify_candidate(int e, const StepSequence& steps, const CertifyOptions& opt = {});

struct CertifyAllOptions {
    CertifyOptions candidate;
    int jobs = 1;
    /// Continue strictly after this sequence.
    std::optional<StepSequence> resume_after;
    /// Stop after emitting this many certificates (0 = no limit).
    std::uint64_t stop_after = 0;
    /// Candidates handed to workers per batch.
    std::size_t batch = 512;
    /// Called from the coordinating thread after every batch.
    std::function<void(std::uint64_t done, int current_first_part)> progress;
};

/// Certifies every member of S*_e (after the resume cursor). Each certificate
/// is passed to sink in enumeration order. Returns the number emitted.
std::uint64_t certify_stream(int e, const CertifyAllOptions& opt, const std::function<void(const Certificate&)>& sink);
std::vector<Certificate> certify_all(int e, const CertifyAllOptions& opt = {});

/// Re-verifies a certificate from its recorded data: recomputes the two
/// comparison polynomials, checks the branch conditions, that the witnesses
/// are the stated roots, that the enclosures contain the true bounds, and the
/// integer coverage. Returns an empty string on success, else the reason.
std::string recheck_certificate(const Certificate& cert, int budget = kDefaultRefineBudget);

}  // namespace threshcert
