#include "threshcert/oracle.hpp"

#include "threshcert/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

namespace threshcert {

PerronData spectral_radius(const DenseGraph& g, double tol, long max_iter) {
    if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
    if (!is_connected(g)) throw NotConnected("spectral_radius needs a connected graph");
    const int n = g.order();
    std::vector<std::vector<int>> nbr(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.edge(i, j)) nbr[i].push_back(j);
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
    PerronData out;
    for (long it = 1; it <= max_iter; ++it) {
        double rho = 0;
        for (int i = 0; i < n; ++i) {
            double s = 0;
            for (int j : nbr[i]) s += x[j];
            y[i] = s;
            rho += x[i] * s;
        }
        double res = 0;
        for (int i = 0; i < n; ++i) res += (y[i] - rho * x[i]) * (y[i] - rho * x[i]);
        res = std::sqrt(res);
        if (res <= tol) {
            out.rho = rho;
            out.vector = x;
            out.iterations = it;
            out.residual = res;
            return out;
        }
        double norm = 0;
        for (int i = 0; i < n; ++i) {
            y[i] += x[i];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    throw NoConvergence("power iteration did not reach the residual tolerance");
}

// ---------------------------------------------------------------- canonical forms

namespace {

// Bit index of pair (i, j), i < j, in graph6 column order.
int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint64_t code_under(const DenseGraph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::uint64_t c = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.edge(perm[i], perm[j])) c |= std::uint64_t{1} << pair_bit(i, j);
    return c;
}

std::uint64_t labelled_code(const DenseGraph& g) {
    std::vector<int> id(g.order());
    std::iota(id.begin(), id.end(), 0);
    return code_under(g, id);
}

std::uint64_t compute_canonical(const DenseGraph& g) {
    const int n = g.order();
    const auto deg = g.degrees();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && deg[order[j]] == deg[order[i]]) ++j;
        blocks.push_back({i, j});
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.size()) {
            best = std::min(best, code_under(g, order));
            return;
        }
        auto first = order.begin() + blocks[b].first, last = order.begin() + blocks[b].second;
        std::sort(first, last);
        do {
            rec(b + 1);
        } while (std::next_permutation(first, last));
    };
    rec(0);
    return best;
}

}  // namespace

std::uint64_t canonical_code(const DenseGraph& g) {
    if (g.order() > 11) throw InvalidArgument("canonical_code supports n <= 11");
    thread_local std::unordered_map<std::uint64_t, std::uint64_t> memo[12];
    const std::uint64_t key = labelled_code(g);
    auto& m = memo[g.order()];
    if (auto it = m.find(key); it != m.end()) return it->second;
    const std::uint64_t c = compute_canonical(g);
    m.emplace(key, c);
    return c;
}

DenseGraph graph_from_code(int n, std::uint64_t code) {
    DenseGraph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> pair_bit(i, j)) & 1) g.set_edge(i, j);
    return g;
}

bool isomorphic(const DenseGraph& a, const DenseGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------- brute force

namespace {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Combination of rank r (colex order, matching Gosper's increasing masks).
std::uint64_t unrank_colex(std::uint64_t r, int total, int m) {
    std::uint64_t mask = 0;
    int c = total - 1;
    for (int i = m; i >= 1; --i) {
        while (binom(c, i) > r) --c;
        mask |= std::uint64_t{1} << c;
        r -= binom(c, i);
        --c;
    }
    return mask;
}

std::uint64_t gosper_next(std::uint64_t v) {
    const std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
}

struct Near {
    double rho;
    std::uint64_t mask;
};

struct WorkerResult {
    double best = 0;
    std::vector<Near> near;
    std::uint64_t subsets = 0, connected = 0, evaluated = 0;
};

constexpr double kNearTol = 1e-9;

WorkerResult brute_range(int n, int m, std::uint64_t first_rank, std::uint64_t count) {
    const int total = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges(total);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edges[pair_bit(i, j)] = {i, j};

    WorkerResult res;
    if (count == 0) return res;
    std::uint64_t mask = unrank_colex(first_rank, total, m);
    int deg[16], parent[16];
    std::uint32_t row[16];
    double x[16], y[16];
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::uint64_t done = 0; done < count; ++done, mask = done < count ? gosper_next(mask) : mask) {
        ++res.subsets;
        for (int v = 0; v < n; ++v) {
            deg[v] = 0;
            row[v] = 0;
            parent[v] = v;
        }
        int merged = 0;
        for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
            const auto [u, v] = edges[__builtin_ctzll(bits)];
            ++deg[u];
            ++deg[v];
            row[u] |= 1u << v;
            row[v] |= 1u << u;
            const int a = find(u), b = find(v);
            if (a != b) {
                parent[a] = b;
                ++merged;
            }
        }
        if (merged != n - 1) continue;
        ++res.connected;
        const double cut = res.best - kNearTol;
        // rho <= max over edges sqrt(d_u d_v)
        int maxprod = 0;
        for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
            const auto [u, v] = edges[__builtin_ctzll(bits)];
            maxprod = std::max(maxprod, deg[u] * deg[v]);
        }
        if (cut > 0 && static_cast<double>(maxprod) < cut * cut) continue;
        ++res.evaluated;
        // Power iteration on A + I with Collatz-Wielandt bounds.
        for (int v = 0; v < n; ++v) x[v] = 1.0;
        double rho = -1;
        for (int it = 0; it < 200000; ++it) {
            double hi = 0, lo = 1e300, ymax = 0;
            for (int v = 0; v < n; ++v) {
                double s = x[v];
                for (std::uint32_t r = row[v]; r; r &= r - 1) s += x[__builtin_ctz(r)];
                y[v] = s;
                const double q = s / x[v];
                hi = std::max(hi, q);
                lo = std::min(lo, q);
                ymax = std::max(ymax, s);
            }
            if (hi - 1 < cut) break;
            if (hi - lo < 1e-12) {
                rho = 0.5 * (hi + lo) - 1;
                break;
            }
            for (int v = 0; v < n; ++v) x[v] = y[v] / ymax;
            if (it + 1 == 200000) throw NoConvergence("power iteration stalled in brute force");
        }
        if (rho < 0 || rho < cut) continue;
        if (rho > res.best) {
            res.best = rho;
            std::erase_if(res.near, [&](const Near& z) { return z.rho < res.best - kNearTol; });
        }
        res.near.push_back({rho, mask});
    }
    return res;
}

}  // namespace

BruteResult brute_force_max(int n, int e, const BruteOptions& opt) {
    if (n < 2 || n > 9) throw InvalidArgument("brute force supports 2 <= n <= 9");
    if (e < 0) throw InvalidArgument("edge surplus must be non-negative");
    const int total = n * (n - 1) / 2;
    const int m = n - 1 + e;
    if (m > total) throw InvalidArgument("too many edges for this order");
    const std::uint64_t subsets = binom(total, m);
    if (subsets > opt.max_subsets)
        throw BudgetExceeded("C(" + std::to_string(total) + "," + std::to_string(m) + ") = " + std::to_string(subsets) +
                             " exceeds the subset budget");
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(std::min<std::uint64_t>(subsets, 64))));
    std::vector<WorkerResult> parts(jobs);
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < jobs; ++w) {
            const std::uint64_t lo = subsets * w / jobs, hi = subsets * (w + 1) / jobs;
            pool.emplace_back([&, w, lo, hi] { parts[w] = brute_range(n, m, lo, hi - lo); });
        }
    }
    BruteResult r;
    r.n = n;
    r.e = e;
    for (const auto& p : parts) {
        r.max_rho = std::max(r.max_rho, p.best);
        r.subsets += p.subsets;
        r.connected += p.connected;
        r.evaluated += p.evaluated;
    }
    std::set<std::uint64_t> classes;
    for (const auto& p : parts)
        for (const auto& z : p.near)
            if (z.rho >= r.max_rho - kNearTol) classes.insert(canonical_code(graph_from_code(n, z.mask)));
    r.maximizer_classes = static_cast<int>(classes.size());
    if (!classes.empty()) r.argmax_graph6 = to_graph6(graph_from_code(n, *classes.begin()));
    const auto p = edge_params(e);
    if (n >= p.b) r.is_D = classes.count(canonical_code(adjacency(build_D(n, e)))) > 0;
    if (n >= e + 2) r.is_V = classes.count(canonical_code(adjacency(build_V(n, e)))) > 0;
    return r;
}

// ---------------------------------------------------------------- Perron ratios

PerronRatios perron_ratios_D(int n, int e) {
    const auto p = edge_params(e);
    if (p.t < 1) throw InvalidRegime("Perron ratios need t_e >= 1");
    const auto pd = spectral_radius(adjacency(build_D(n, e)), 1e-13);
    const auto& y = pd.vector;
    PerronRatios r;
    r.gamma = pd.rho;
    r.y2 = y[1] / y[0];
    r.yk1 = y[p.k] / y[0];
    r.yk2 = y[p.k + 1] / y[0];
    r.yn = y[n - 1] / y[0];
    return r;
}

PerronRatios perron_ratio_formulas(double g, int e) {
    const auto p = edge_params(e);
    const double k = p.k, t = p.t;
    const double a = g * (g + 2) - k + t + 1;
    const double delta = g * (g + 1) * (g - k + t + 1) - t * a;
    PerronRatios r;
    r.gamma = g;
    r.y2 = a / delta;
    r.yk1 = g * (g + 1) / delta;
    r.yk2 = (g + 1) * (g - k + t + 1) / delta;
    r.yn = 1 / g;
    return r;
}

}  // namespace threshcert
