#pragma once

// Floating-point ground truth: spectral radii by power iteration, Perron
// vectors, and exhaustive search over all connected graphs at tiny orders.

#include "threshcert/graphs.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace threshcert {

struct PerronData {
    double rho = 0;
    /// Positive, unit 2-norm.
    std::vector<double> vector;
    long iterations = 0;
    double residual = 0;
};

/// Power iteration on A + I from the all-ones vector (the shift makes the
/// iteration converge on bipartite graphs too). Stops when the residual
/// |A v - rho v|_2 drops to tol. Throws NotConnected and NoConvergence.
PerronData spectral_radius(const DenseGraph& g, double tol = 1e-10, long max_iter = 1000000);

struct BruteResult {
    int n = 0;
    int e = 0;
    double max_rho = 0;
    /// graph6 of the canonical form of a maximizer.
    std::string argmax_graph6;
    bool is_D = false;
    bool is_V = false;
    /// Isomorphism classes among the graphs within 1e-9 of the maximum.
    int maximizer_classes = 0;
    std::uint64_t subsets = 0;
    std::uint64_t connected = 0;
    /// Connected graphs whose spectral radius had to be computed.
    std::uint64_t evaluated = 0;
};

struct BruteOptions {
    std::uint64_t max_subsets = 100000000;
    int jobs = 1;
};

/// Exhaustive maximization of the spectral radius over connected graphs of
/// order n and size n - 1 + e on labelled vertices. n <= 9. Throws
/// BudgetExceeded when C(C(n,2), n-1+e) exceeds the configured budget.
BruteResult brute_force_max(int n, int e, const BruteOptions& opt = {});

/// Canonical code: minimum upper-triangle bit string over all vertex
/// orderings that sort degrees decreasingly. n <= 11.
std::uint64_t canonical_code(const DenseGraph& g);
DenseGraph graph_from_code(int n, std::uint64_t code);
bool isomorphic(const DenseGraph& a, const DenseGraph& b);

struct PerronRatios {
    double gamma = 0;
    double y2 = 0;
    double yk1 = 0;
    double yk2 = 0;
    /// y_n / y_1 for the last pendant vertex.
    double yn = 0;
};
/// Ratios y_2/y_1, y_{k+1}/y_1, y_{k+2}/y_1 (1-based) from the numeric Perron
/// vector of D(n,e). Requires t_e >= 1 and n >= b_e.
PerronRatios perron_ratios_D(int n, int e);
/// The same three ratios from their closed forms in gamma, k and t.
PerronRatios perron_ratio_formulas(double gamma, int e);

}  // namespace threshcert
