#include "threshcert/errors.hpp"
#include "threshcert/tsubenum.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

using namespace threshcert;

namespace {

// All subsets of {1..e} summing to e, as decreasing sequences.
std::set<std::vector<int>> brute_partitions(int e) {
    std::set<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.insert(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p - 1);
            cur.pop_back();
        }
    };
    rec(e, e);
    return out;
}

std::vector<StepSequence> drain(CandidateStream s) {
    std::vector<StepSequence> out;
    while (auto x = s.next()) out.push_back(*x);
    return out;
}

}  // namespace

TEST_CASE("small enumerations") {
    CHECK(enumerate_S(4) == std::vector<StepSequence>{{4}, {3, 1}});
    CHECK(enumerate_S(5) == std::vector<StepSequence>{{5}, {4, 1}, {3, 2}});
    CHECK(enumerate_S(7) == std::vector<StepSequence>{{7}, {6, 1}, {5, 2}, {4, 3}, {4, 2, 1}});
    CHECK(enumerate_S_star(4).empty());
    CHECK(enumerate_S_star(5) == std::vector<StepSequence>{{4, 1}});
    CHECK(enumerate_S_star(7) == std::vector<StepSequence>{{6, 1}, {5, 2}, {4, 3}});
    CHECK(enumerate_S_star(12).size() == 13);
    CHECK_THROWS_AS(enumerate_S_star(10), InvalidRegime);
    CHECK(is_extremal_tsub(7, StepSequence{7}));
    CHECK(is_extremal_tsub(7, StepSequence{4, 2, 1}));
    CHECK_FALSE(is_extremal_tsub(7, StepSequence{4, 3}));
}

TEST_CASE("counts") {
    CHECK(count_S(4) == 2);
    CHECK(count_S(10) == 10);
    CHECK(count_S(12) == 15);
    CHECK(count_S(130) > 0);
    for (int e = 1; e <= 45; ++e) CHECK(count_S(e) == brute_partitions(e).size());
    // q(130) from the recurrence on partitions into distinct parts, computed in 128-bit.
    std::vector<unsigned __int128> q(131, 0);
    q[0] = 1;
    for (int part = 1; part <= 130; ++part)
        for (int s = 130; s >= part; --s) q[s] += q[s - part];
    CHECK(count_S(130) == static_cast<std::uint64_t>(q[130]));
}

TEST_CASE("stream matches brute force in lexicographically decreasing order") {
    for (int e = 1; e <= 30; ++e) {
        const auto want = brute_partitions(e);
        const auto got = enumerate_S(e);
        std::vector<std::vector<int>> expect(want.rbegin(), want.rend());
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].vec() == expect[i]);
    }
}

TEST_CASE("blocks partition the stream") {
    for (int e = 3; e <= 40; ++e) {
        std::vector<StepSequence> joined;
        for (int f : first_part_blocks(e)) {
            const auto block = drain(CandidateStream::block(e, f));
            CHECK(block.size() == count_S_with_first(e, f));
            for (const auto& s : block) CHECK(s.first() == f);
            joined.insert(joined.end(), block.begin(), block.end());
        }
        CHECK(joined == enumerate_S(e));
    }
    CHECK(first_part_blocks(10) == std::vector<int>{10, 9, 8, 7, 6, 5, 4});
}

TEST_CASE("resume after any cursor yields the suffix") {
    for (int e : {6, 11, 17, 23}) {
        const auto all = enumerate_S(e);
        for (std::size_t i = 0; i < all.size(); ++i) {
            const auto rest = drain(CandidateStream::resume_after(e, all[i]));
            CHECK(rest == std::vector<StepSequence>(all.begin() + static_cast<long>(i) + 1, all.end()));
        }
    }
    CHECK_THROWS_AS(CandidateStream::resume_after(7, StepSequence{5, 1}), InvalidArgument);
}
