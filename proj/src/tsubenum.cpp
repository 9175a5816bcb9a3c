#include "threshcert/tsubenum.hpp"

#include "threshcert/errors.hpp"

#include <numeric>

namespace threshcert {

namespace {

// Largest-first completion of `rest` with distinct parts below `limit`.
// Feasible iff rest <= limit(limit-1)/2, which callers guarantee.
void fill_greedy(std::vector<int>& out, int rest, int limit) {
    int m = limit - 1;
    while (rest > 0) {
        const int p = std::min(m, rest);
        out.push_back(p);
        rest -= p;
        m = p - 1;
    }
}

bool fits_below(std::int64_t rest, std::int64_t limit) { return rest <= limit * (limit - 1) / 2; }

// Partitions of `total` into distinct parts each at most `max_part`.
std::uint64_t count_bounded(int total, int max_part) {
    if (total < 0) return 0;
    std::vector<std::uint64_t> dp(static_cast<std::size_t>(total) + 1, 0);
    dp[0] = 1;
    for (int p = 1; p <= std::min(max_part, total); ++p)
        for (int j = total; j >= p; --j) dp[j] += dp[j - p];
    return dp[total];
}

}  // namespace

CandidateStream::CandidateStream(int e) : CandidateStream(e, {e}, 0) {}

CandidateStream::CandidateStream(int e, std::vector<int> start, int fixed_first)
    : e_(e), cur_(std::move(start)), fixed_first_(fixed_first) {
    if (e < 1) throw InvalidArgument("enumeration needs e >= 1");
}

CandidateStream CandidateStream::block(int e, int first_part) {
    if (e < 1) throw InvalidArgument("enumeration needs e >= 1");
    if (first_part < 1 || first_part > e || !fits_below(e - first_part, first_part))
        throw InvalidArgument("no distinct-part partition of " + std::to_string(e) + " starts with " +
                              std::to_string(first_part));
    std::vector<int> start{first_part};
    fill_greedy(start, e - first_part, first_part);
    return CandidateStream(e, std::move(start), first_part);
}

CandidateStream CandidateStream::resume_after(int e, const StepSequence& cursor) {
    if (cursor.sum() != e) throw InvalidArgument("cursor " + cursor.to_string() + " does not sum to e");
    CandidateStream s(e, cursor.vec(), 0);
    s.started_ = true;
    return s;
}

std::optional<StepSequence> CandidateStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return StepSequence(cur_);
    }
    int prefix = std::accumulate(cur_.begin(), cur_.end(), 0);
    for (int i = static_cast<int>(cur_.size()) - 1; i >= 0; --i) {
        prefix -= cur_[i];
        const int v = cur_[i] - 1;
        const int rest = e_ - prefix - v;
        if (v < 1 || !fits_below(rest, v)) continue;
        if (i == 0 && fixed_first_ != 0) break;
        cur_.resize(static_cast<std::size_t>(i));
        cur_.push_back(v);
        fill_greedy(cur_, rest, v);
        return StepSequence(cur_);
    }
    done_ = true;
    return std::nullopt;
}

std::vector<StepSequence> enumerate_S(int e) {
    std::vector<StepSequence> out;
    CandidateStream s(e);
    while (auto x = s.next()) out.push_back(std::move(*x));
    return out;
}

bool is_extremal_tsub(int e, const StepSequence& steps) { return steps == v_steps(e) || steps == d_steps(e); }

std::vector<StepSequence> enumerate_S_star(int e) {
    const auto p = edge_params(e);
    if (p.t == 0) throw InvalidRegime("S*_e is only defined for t_e >= 1 (e = " + std::to_string(e) + ")");
    std::vector<StepSequence> out;
    CandidateStream s(e);
    while (auto x = s.next())
        if (!is_extremal_tsub(e, *x)) out.push_back(std::move(*x));
    return out;
}

std::uint64_t count_S(int e) {
    if (e < 1) throw InvalidArgument("count_S needs e >= 1");
    return count_bounded(e, e);
}

std::uint64_t count_S_with_first(int e, int s1) {
    if (s1 < 1 || s1 > e) return 0;
    return count_bounded(e - s1, s1 - 1);
}

std::vector<int> first_part_blocks(int e) {
    std::vector<int> out;
    for (int s = e; s >= 1 && fits_below(e - s, s); --s) out.push_back(s);
    return out;
}

}  // namespace threshcert
