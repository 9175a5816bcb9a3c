#pragma once

// Streaming enumeration of T-subgraph step sequences: partitions of e into
// distinct parts, emitted in lexicographically decreasing order.

#include "threshcert/graphs.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace threshcert {

/// Single-consumer stream over the distinct-part partitions of e. The whole
/// stream starts at (e); a block stream covers only sequences with a fixed
/// first part s_1.
class CandidateStream {
public:
    explicit CandidateStream(int e);

    /// Sequences whose first part equals first_part.
    static CandidateStream block(int e, int first_part);
    /// Continues the whole stream strictly after cursor.
    static CandidateStream resume_after(int e, const StepSequence& cursor);

    std::optional<StepSequence> next();
    int e() const noexcept { return e_; }

private:
    CandidateStream(int e, std::vector<int> start, int fixed_first);

    int e_;
    std::vector<int> cur_;
    bool started_ = false;
    bool done_ = false;
    int fixed_first_ = 0;
};

std::vector<StepSequence> enumerate_S(int e);
/// S_e without (e) and the D steps. Throws InvalidRegime when t_e = 0.
std::vector<StepSequence> enumerate_S_star(int e);
/// True for the two extremal step sequences excluded from S*_e.
bool is_extremal_tsub(int e, const StepSequence& steps);

/// Number of distinct-part partitions of e (dynamic programming).
std::uint64_t count_S(int e);
/// Number of distinct-part partitions of e with largest part s1.
std::uint64_t count_S_with_first(int e, int s1);
/// Admissible first parts, decreasing: from e down to the smallest s with
/// s(s+1)/2 >= e.
std::vector<int> first_part_blocks(int e);

}  // namespace threshcert
