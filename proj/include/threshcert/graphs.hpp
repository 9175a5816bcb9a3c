#pragma once

// Threshold graphs in C(n, e), the two extremal families D(n, e) and V(n, e),
// and the step-sequence encoding of T-subgraphs.
//
// Vertex 0 is always the dominating vertex. For a step sequence
// (s_1, ..., s_c) the T-subgraph occupies vertices 1 .. s_1 + 1 and vertex i
// (1 <= i <= c) is adjacent to every j with i < j <= i + s_i. Remaining
// vertices are pendants of vertex 0.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace threshcert {

/// k: largest integer with C(k,2) <= e; t = e - C(k,2); b: minimum order of a
/// connected graph with n - 1 + e edges.
struct EdgeParams {
    int e = 0;
    int k = 1;
    int t = 0;
    int b = 1;

    friend bool operator==(const EdgeParams&, const EdgeParams&) = default;
};

std::int64_t binom2(std::int64_t k);

EdgeParams edge_params(int e);

/// Strictly decreasing sequence of positive integers.
class StepSequence {
public:
    StepSequence() = default;
    explicit StepSequence(std::vector<int> steps);
    StepSequence(std::initializer_list<int> steps);

    std::span<const int> parts() const noexcept { return steps_; }
    const std::vector<int>& vec() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    int operator[](std::size_t i) const { return steps_[i]; }

    /// s_1, or 0 for the empty sequence.
    int first() const noexcept { return steps_.empty() ? 0 : steps_.front(); }
    /// Encoded edge count e.
    int sum() const noexcept { return sum_; }
    /// Order of the T-subgraph, s_1 + 1.
    int tsub_order() const noexcept { return first() + 1; }

    std::string to_string() const;

    friend bool operator==(const StepSequence& a, const StepSequence& b) { return a.steps_ == b.steps_; }
    friend auto operator<=>(const StepSequence& a, const StepSequence& b) { return a.steps_ <=> b.steps_; }

private:
    std::vector<int> steps_;
    int sum_ = 0;
};

/// Steps of T(D(n,e)) = K_t v (K_{k-t} + K_1): (k, ..., k-t+1, k-t-1, ..., 1).
StepSequence d_steps(int e);
/// Steps of T(V(n,e)) = K_{1,e}: (e).
StepSequence v_steps(int e);

/// Simple graph as a dense symmetric 0/1 matrix.
class DenseGraph {
public:
    DenseGraph() = default;
    explicit DenseGraph(int n);

    int order() const noexcept { return n_; }
    bool edge(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    void set_edge(int i, int j, bool on = true);

    int degree(int i) const;
    std::vector<int> degrees() const;
    std::int64_t edge_count() const;
    std::vector<std::int64_t> row_major() const;

    friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

private:
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Connected threshold graph in C(n, e), identified by its T-subgraph steps.
class ThresholdGraph {
public:
    ThresholdGraph(StepSequence steps, int n);

    int order() const noexcept { return n_; }
    const StepSequence& steps() const noexcept { return steps_; }
    int edge_surplus() const noexcept { return steps_.sum(); }
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(n_) - 1 + steps_.sum(); }

    friend bool operator==(const ThresholdGraph&, const ThresholdGraph&) = default;

private:
    StepSequence steps_;
    int n_;
};

ThresholdGraph build_D(int n, int e);
ThresholdGraph build_V(int n, int e);
ThresholdGraph threshold_from_tsub(const StepSequence& steps, int n);

StepSequence tsubgraph_of(const ThresholdGraph& g);
/// Recovers the step sequence from a stepwise adjacency matrix whose vertex 0
/// is dominating. Throws Degenerate when there are no T-subgraph edges and
/// InvalidArgument when the matrix is not of that shape.
StepSequence tsubgraph_of(const DenseGraph& g);

DenseGraph adjacency(const ThresholdGraph& g);
/// T alone, order s_1 + 1.
DenseGraph tsub_adjacency(const StepSequence& steps);
/// T v K_1, order s_1 + 2.
DenseGraph tsub_join_adjacency(const StepSequence& steps);

DenseGraph complete_graph(int n);
DenseGraph star_graph(int leaves);

bool is_stepwise(const DenseGraph& g);
bool is_connected(const DenseGraph& g);

std::string to_graph6(const DenseGraph& g);
DenseGraph from_graph6(std::string_view text);

}  // namespace threshcert
