#include "threshcert/graphs.hpp"

#include "threshcert/errors.hpp"

#include <algorithm>
#include <numeric>

namespace threshcert {

std::int64_t binom2(std::int64_t k) { return k * (k - 1) / 2; }

EdgeParams edge_params(int e) {
    if (e < 0) throw InvalidArgument("edge surplus must be non-negative");
    EdgeParams p;
    p.e = e;
    int k = 1;
    while (binom2(k + 1) <= e) ++k;
    p.k = k;
    p.t = e - static_cast<int>(binom2(k));
    if (e == 0)
        p.b = 1;
    else if (p.t == 0)
        p.b = k + 1;
    else
        p.b = k + 2;
    return p;
}

StepSequence::StepSequence(std::vector<int> steps) : steps_(std::move(steps)) {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i] <= 0) throw InvalidArgument("step sequence entries must be positive");
        if (i > 0 && steps_[i] >= steps_[i - 1])
            throw InvalidArgument("step sequence must be strictly decreasing");
    }
    sum_ = std::accumulate(steps_.begin(), steps_.end(), 0);
}

StepSequence::StepSequence(std::initializer_list<int> steps) : StepSequence(std::vector<int>(steps)) {}

std::string StepSequence::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(steps_[i]);
    }
    return out + ")";
}

StepSequence d_steps(int e) {
    const auto p = edge_params(e);
    std::vector<int> s;
    for (int v = p.k; v > p.k - p.t; --v) s.push_back(v);
    for (int v = p.k - p.t - 1; v >= 1; --v) s.push_back(v);
    return StepSequence(std::move(s));
}

StepSequence v_steps(int e) {
    if (e <= 0) return {};
    return StepSequence({e});
}

DenseGraph::DenseGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw InvalidArgument("negative order");
}

void DenseGraph::set_edge(int i, int j, bool on) {
    if (i == j) throw InvalidArgument("loops are not allowed");
    adj_[static_cast<std::size_t>(i) * n_ + j] = on;
    adj_[static_cast<std::size_t>(j) * n_ + i] = on;
}

int DenseGraph::degree(int i) const {
    int d = 0;
    for (int j = 0; j < n_; ++j) d += edge(i, j);
    return d;
}

std::vector<int> DenseGraph::degrees() const {
    std::vector<int> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = degree(i);
    return d;
}

std::int64_t DenseGraph::edge_count() const {
    std::int64_t m = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) m += edge(i, j);
    return m;
}

std::vector<std::int64_t> DenseGraph::row_major() const {
    return {adj_.begin(), adj_.end()};
}

ThresholdGraph::ThresholdGraph(StepSequence steps, int n) : steps_(std::move(steps)), n_(n) {
    const int min_order = steps_.empty() ? 1 : steps_.first() + 2;
    if (n_ < min_order)
        throw OrderTooSmall("order " + std::to_string(n_) + " is below s_1 + 2 = " + std::to_string(min_order));
}

ThresholdGraph build_D(int n, int e) {
    const auto p = edge_params(e);
    if (n < p.b)
        throw OrderTooSmall("D(n,e) needs n >= b_e = " + std::to_string(p.b));
    // For n < k + 2 only n = k + 1 with t = 0 remains, where D is K_n and its
    // T-subgraph K_k has the same steps (k-1, ..., 1).
    return ThresholdGraph(d_steps(e), n);
}

ThresholdGraph build_V(int n, int e) {
    if (e < 0) throw InvalidArgument("edge surplus must be non-negative");
    if (n < e + 2) throw OrderTooSmall("V(n,e) needs n >= e + 2 = " + std::to_string(e + 2));
    return ThresholdGraph(v_steps(e), n);
}

ThresholdGraph threshold_from_tsub(const StepSequence& steps, int n) { return ThresholdGraph(steps, n); }

StepSequence tsubgraph_of(const ThresholdGraph& g) { return tsubgraph_of(adjacency(g)); }

StepSequence tsubgraph_of(const DenseGraph& g) {
    const int n = g.order();
    if (n == 0) throw InvalidArgument("empty graph");
    for (int j = 1; j < n; ++j)
        if (!g.edge(0, j)) throw InvalidArgument("vertex 0 is not dominating");
    if (!is_stepwise(g)) throw InvalidArgument("adjacency matrix is not stepwise");
    std::vector<int> steps;
    for (int i = 1; i < n; ++i) {
        int last = i;
        for (int j = i + 1; j < n; ++j)
            if (g.edge(i, j)) last = j;
        if (last == i) break;
        steps.push_back(last - i);
    }
    if (steps.empty()) throw Degenerate("graph has no T-subgraph edges (e = 0)");
    return StepSequence(std::move(steps));
}

namespace {

void add_tsub_edges(DenseGraph& g, const StepSequence& steps, int offset) {
    for (std::size_t idx = 0; idx < steps.size(); ++idx) {
        const int i = static_cast<int>(idx) + offset;
        for (int j = i + 1; j <= i + steps[idx]; ++j) g.set_edge(i, j);
    }
}

}  // namespace

DenseGraph adjacency(const ThresholdGraph& g) {
    DenseGraph a(g.order());
    for (int j = 1; j < g.order(); ++j) a.set_edge(0, j);
    add_tsub_edges(a, g.steps(), 1);
    return a;
}

DenseGraph tsub_adjacency(const StepSequence& steps) {
    DenseGraph a(steps.tsub_order());
    add_tsub_edges(a, steps, 0);
    return a;
}

DenseGraph tsub_join_adjacency(const StepSequence& steps) {
    return adjacency(ThresholdGraph(steps, steps.first() + 2));
}

DenseGraph complete_graph(int n) {
    DenseGraph a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a.set_edge(i, j);
    return a;
}

DenseGraph star_graph(int leaves) {
    DenseGraph a(leaves + 1);
    for (int j = 1; j <= leaves; ++j) a.set_edge(0, j);
    return a;
}

bool is_stepwise(const DenseGraph& g) {
    // A_ij = 1 (i < j) forces A_kl = 1 for k < l, k <= i, l <= j. Equivalent:
    // each row's upper part is a contiguous prefix, the non-empty rows come
    // first, and their extents are weakly decreasing.
    const int n = g.order();
    int prev_ext = n;
    bool ended = false;
    for (int i = 0; i < n; ++i) {
        int ext = -1;
        for (int j = i + 1; j < n; ++j)
            if (g.edge(i, j)) ext = j;
        if (ext < 0) {
            ended = true;
            continue;
        }
        if (ended || ext > prev_ext) return false;
        for (int j = i + 1; j <= ext; ++j)
            if (!g.edge(i, j)) return false;
        prev_ext = ext;
    }
    return true;
}

bool is_connected(const DenseGraph& g) {
    const int n = g.order();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (g.edge(v, w) && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

std::string to_graph6(const DenseGraph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw InvalidArgument("graph6 encoding limited to n <= 258047");
    }
    int bits = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = acc = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

DenseGraph from_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw InvalidArgument("empty graph6 string");
    auto byte = [&](std::size_t i) {
        const int v = static_cast<unsigned char>(text[i]) - 63;
        if (v < 0 || v > 63) throw InvalidArgument("invalid graph6 character");
        return v;
    };
    std::size_t pos = 0;
    int n = 0;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() < 4 || static_cast<unsigned char>(text[1]) == 126)
            throw InvalidArgument("unsupported graph6 size header");
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    DenseGraph g(n);
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (text.size() - pos != (nbits + 5) / 6) throw InvalidArgument("graph6 length mismatch");
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = byte(pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1) g.set_edge(i, j);
        }
    return g;
}

}  // namespace threshcert
