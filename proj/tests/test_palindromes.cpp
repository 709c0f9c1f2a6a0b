#include <doctest.h>

#include "sagp/oracle.hpp"
#include "sagp/palindromes.hpp"
#include "support.hpp"

using namespace sagp;
using sagp::test::text_of;

TEST_CASE("pals golden values") {
    CHECK(compute_pals(text_of("acacabaabca"))[7] == 2);
    const auto p = compute_pals(text_of("baaabaabaacbaabaabac"));
    CHECK(p[13] == 2);
    CHECK(p[6] == 4);
    const auto z = compute_pals(text_of("abcd"));
    CHECK(z.pals == std::vector<Index>{0, 0, 0, 0, 0});
    CHECK(compute_pals(Text{}).size() == 0);
}

TEST_CASE("pals equal the expansion oracle") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& s : sagp::test::all_strings(n, 3)) {
            const Text t = text_of(s);
            REQUIRE(compute_pals(t).pals == oracle::brute_force_pals(t));
        }
    }
    for (const auto& t : sagp::test::fuzz_corpus(300, 200, 4)) {
        CHECK(compute_pals(t).pals == oracle::brute_force_pals(t));
    }
    for (const auto& s : sagp::test::structured_family(64)) {
        const Text t = text_of(s);
        CHECK(compute_pals(t).pals == oracle::brute_force_pals(t));
    }
}

TEST_CASE("buckets group radii by begin position") {
    const auto b = compute_buckets(compute_pals(text_of("acacabaabca")));
    REQUIRE(b.size() == 11);
    for (Index x = 1; x <= 11; ++x) {
        if (x == 6) {
            REQUIRE(b.at(x).size() == 1);
            CHECK(b.at(x)[0] == 2);
        } else {
            CHECK(b.at(x).empty());
        }
    }
    CHECK(b.total() == 1);
    CHECK(compute_buckets(compute_pals(text_of("abcd"))).total() == 0);

    for (const auto& t : sagp::test::fuzz_corpus(100, 60, 8)) {
        const auto pals = compute_pals(t);
        const auto bk = compute_buckets(pals);
        std::size_t count = 0;
        for (Index i = 1; i <= t.size(); ++i) count += pals[i] > 0;
        CHECK(bk.total() == count);
        for (Index beg = 1; beg <= t.size(); ++beg) {
            Index prev = 0;
            for (Index r : bk.at(beg)) {
                CHECK(r > prev);
                CHECK(pals[beg + r - 1] == r);
                prev = r;
            }
        }
    }
}
