// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sagp/classify.hpp"
#include "sagp/oracle.hpp"
#include "sagp/pipeline.hpp"
#include "sagp/predsucc.hpp"
#include "sagp/type1_stree.hpp"
#include "sagp/type2.hpp"
#include "support.hpp"

using namespace sagp;
using sagp::test::text_of;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

// Corpus of criteria 2, 3 and 8.
struct Corpus {
    std::vector<Text> exhaustive;
    std::vector<Text> fuzz;
    std::vector<Text> structured;
};

Corpus build_corpus() {
    Corpus c;
    for (int n = 1; n <= 12; ++n) {
        for (const auto& s : sagp::test::all_strings(n, 3)) c.exhaustive.push_back(text_of(s));
    }
    c.fuzz = sagp::test::fuzz_corpus(1000, 64, 20240601);
    for (const auto& s : sagp::test::structured_family(64)) c.structured.push_back(text_of(s));
    return c;
}

template <class F>
void for_each_text(const Corpus& c, F&& f) {
    for (const auto& t : c.exhaustive) f(t);
    for (const auto& t : c.fuzz) f(t);
    for (const auto& t : c.structured) f(t);
}

std::string describe(const Text& t) {
    std::string s;
    for (Symbol x : t.raw()) s += std::to_string(x) + ".";
    return s;
}

// ---------------------------------------------------------------- 1

Verdict golden_examples() {
    Verdict v;
    const std::vector<Sagp> p13{{13, 4, 1, 2, PivotType::Type1}, {13, 4, 4, 2, PivotType::Type1}};
    const std::vector<Sagp> p7{{7, 2, 1, 2, PivotType::Type1}, {7, 2, 3, 2, PivotType::Type1}};
    for (Backend b : all_backends()) {
        const std::string name(backend_name(b));
        const auto r = compute_sagps(text_of("baaabaabaacbaabaabac"), b);
        if (r.types[13] != PivotType::Type1 || std::vector<Sagp>(r.at(13).begin(), r.at(13).end()) != p13) {
            v.fail(name + ": pivot 13");
        }
        const auto six = r.at(6);
        if (r.types[6] != PivotType::Type2 ||
            std::find(six.begin(), six.end(), Sagp{6, 1, 1, 3, PivotType::Type2}) == six.end()) {
            v.fail(name + ": pivot 6");
        }
        const auto a = compute_sagps(text_of("acacabaabca"), b);
        if (std::vector<Sagp>(a.at(7).begin(), a.at(7).end()) != p7) v.fail(name + ": acacabaabca pivot 7");
    }
    const Text d = text_of("dbbaacbcbad");
    const auto tab = build_tables(d);
    const auto rank = [&](Index pos) { return d[pos]; };
    if (tab.leftmost(rank(4)) != 4 || tab.leftmost(rank(2)) != 2 || tab.leftmost(rank(6)) != 6 ||
        tab.leftmost(rank(1)) != 1) {
        v.fail("lmost table");
    }
    const Index inf = kInfinity;
    const auto findr = build_findr(d, tab).findr;
    if (std::vector<Index>(tab.nextpos.begin() + 1, tab.nextpos.end()) !=
        std::vector<Index>{11, 3, 7, 5, 10, 8, 9, inf, inf, inf, inf}) {
        v.fail("nextpos table");
    }
    if (std::vector<Index>(findr.begin() + 1, findr.end()) != std::vector<Index>{3, 3, 3, 5, 5, 7, 7, 8, 9, 10, 11}) {
        v.fail("findr table");
    }
    if (v.pass) v.detail = "6 backends, both worked examples, LMost/NextPos/FindR table";
    return v;
}

// ---------------------------------------------------------------- 2

Verdict oracle_equivalence(const Corpus& c) {
    Verdict v;
    const auto start = Clock::now();
    std::size_t strings = 0;
    for_each_text(c, [&](const Text& t) {
        ++strings;
        const auto want = oracle::brute_force_sagps(t);
        for (Backend b : all_backends()) {
            if (compute_sagps(t, b) != want) v.fail(std::string(backend_name(b)) + " differs on " + describe(t));
        }
    });
    const double secs = seconds_since(start);
    if (secs >= 300.0) v.fail("took " + std::to_string(secs) + " s (limit 300 s)");
    if (v.pass) {
        v.detail = std::to_string(strings) + " strings x 6 backends in " + std::to_string(static_cast<int>(secs)) + " s";
    }
    return v;
}

// ---------------------------------------------------------------- 3

bool growing_tree_matches(const Text& t) {
    struct Node {
        Index depth, leaf;
        std::size_t kids;
        bool operator==(const Node&) const = default;
    };
    const Index n = t.size();
    const auto rev = build_reversed_index(t);
    const auto seq = reversed_with_terminator(t);
    GrowingTree g(n);
    for (Index k = n + 1; k >= 1; --k) {
        if (k <= n) grow_insert_leaf(g, rev, k);
        std::vector<Node> grown;
        std::vector<Index> stack{g.root()};
        while (!stack.empty()) {
            const Index x = stack.back();
            stack.pop_back();
            std::vector<Index> kids;
            for (Index y = g.first_child(x); y != GrowingTree::kNone; y = g.next_sibling(y)) kids.push_back(y);
            grown.push_back({g.depth(x), g.leaf_position(x), kids.size()});
            stack.insert(stack.end(), kids.rbegin(), kids.rend());
        }
        const auto fresh = build_tree_from_index(build_index(std::vector<Index>(seq.begin() + k, seq.end())));
        std::vector<Node> built;
        for (Index x : fresh.preorder()) {
            built.push_back({fresh.depth(x), fresh.is_leaf(x) ? fresh.representative(x) + k - 1 : 0,
                             fresh.children(x).size()});
        }
        if (grown != built) return false;
    }
    return true;
}

bool plv_nlv_matches(const Text& t) {
    const auto seq = reversed_with_terminator(t);
    const auto idx = build_index(std::span<const Index>(seq).subspan(1));
    const auto pn = build_plv_nlv(idx);
    const Index m = idx.size();
    for (Index j = 1; j <= m; ++j) {
        Index p = 0;
        for (Index x = j - 1; x >= 1 && !p; --x) {
            if (idx.sa[x] > idx.sa[j]) p = x;
        }
        Index q = m + 1;
        for (Index x = j + 1; x <= m && q == m + 1; ++x) {
            if (idx.sa[x] > idx.sa[j]) q = x;
        }
        if (pn.plv[j] != p || pn.nlv[j] != q) return false;
    }
    return true;
}

Verdict component_oracles(const Corpus& c) {
    Verdict v;
    std::size_t strings = 0;
    for_each_text(c, [&](const Text& t) {
        ++strings;
        if (compute_pals(t).pals != oracle::brute_force_pals(t)) v.fail("pals on " + describe(t));
        if (build_findr(t, build_tables(t)).findr != oracle::brute_force_findr(t)) v.fail("findr on " + describe(t));
        if (!plv_nlv_matches(t)) v.fail("plv/nlv on " + describe(t));
        if (!growing_tree_matches(t)) v.fail("growing tree on " + describe(t));
    });
    if (v.pass) v.detail = std::to_string(strings) + " strings: pals, findr, plv/nlv, growing tree per prefix";
    return v;
}

// ---------------------------------------------------------------- 4

template <class Set>
bool model_agrees(Key universe, std::uint64_t seed, int ops) {
    Set s(universe);
    std::set<Key> model;
    SplitMix64 rng(seed);
    for (int op = 0; op < ops; ++op) {
        const Key x = 1 + static_cast<Key>(rng.next() % universe);
        const auto kind = rng.next() % 3;
        if (kind == 0) {
            s.insert(x);
            model.insert(x);
        } else if (kind == 1) {
            auto it = model.lower_bound(x);
            std::optional<Key> want;
            if (it != model.begin()) want = *std::prev(it);
            if (s.predecessor(x) != want) return false;
        } else {
            auto it = model.upper_bound(x);
            std::optional<Key> want;
            if (it != model.end()) want = *it;
            if (s.successor(x) != want) return false;
        }
    }
    return s.size() == model.size();
}

Verdict predsucc_models() {
    Verdict v;
    const std::vector<Key> universes{1u << 20, (1u << 20) - 3, 1u << 12, 100};
    for (std::size_t x = 0; x < universes.size(); ++x) {
        if (!model_agrees<OrderedSetBaseline>(universes[x], x, 100000)) v.fail("baseline");
        if (!model_agrees<VebTree>(universes[x], x, 100000)) v.fail("veb");
        if (!model_agrees<YFastTrie>(universes[x], x, 100000)) v.fail("yfast");
    }
    if (v.pass) v.detail = "3 backends x 4 universes (up to 2^20) x 1e5 operations";
    return v;
}

// ---------------------------------------------------------------- 5-7

double time_type1(const Text& t, Backend b, Type1Run* keep = nullptr) {
    const auto start = Clock::now();
    auto run = compute_type1(t, b);
    const double secs = seconds_since(start);
    if (keep) *keep = std::move(run);
    return secs;
}

Verdict performance() {
    Verdict v;
    const Text t5 = random_text(100000, 10, 1);
    const double naive = time_type1(t5, Backend::Naive);
    double traverse = 1e9;
    for (int r = 0; r < 3; ++r) traverse = std::min(traverse, time_type1(t5, Backend::Traverse));
    const double speedup = naive / traverse;
    if (speedup < 50.0) v.fail("traverse only " + std::to_string(speedup) + "x faster than naive");

    const Text t6 = random_text(1000000, 10, 2);
    std::string slowest;
    double worst = 0;
    for (Backend b : all_backends()) {
        if (b == Backend::Naive) continue;
        const double secs = time_type1(t6, b);
        if (secs > worst) {
            worst = secs;
            slowest = std::string(backend_name(b));
        }
        if (secs > 10.0) v.fail(std::string(backend_name(b)) + " took " + std::to_string(secs) + " s at n=1e6");
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "n=1e5: naive %.2f s, traverse %.4f s (%.0fx); n=1e6 slowest %s %.2f s", naive,
                  traverse, speedup, slowest.c_str(), worst);
    if (v.pass) v.detail = buf;
    return v;
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

Verdict near_linearity() {
    Verdict v;
    std::vector<double> big, half;
    for (int r = 0; r < 5; ++r) {
        half.push_back(time_type1(random_text(500000, 10, 100 + static_cast<std::uint64_t>(r)), Backend::Stree));
        big.push_back(time_type1(random_text(1000000, 10, 200 + static_cast<std::uint64_t>(r)), Backend::Stree));
    }
    const double ratio = median_of(big) / median_of(half);
    char buf[160];
    std::snprintf(buf, sizeof buf, "median t(1e6)=%.3f s, t(5e5)=%.3f s, ratio %.2f", median_of(big), median_of(half),
                  ratio);
    v.detail = buf;
    if (ratio > 2.5) v.pass = false;
    return v;
}

Verdict traversal_growth() {
    Verdict v;
    auto average = [](std::size_t n, std::uint64_t seed0) {
        double sum = 0;
        for (std::uint64_t s = 0; s < 3; ++s) {
            Type1Run run;
            time_type1(random_text(n, 10, seed0 + s), Backend::Traverse, &run);
            sum += run.traversal->entries_per_pivot();
        }
        return sum / 3;
    };
    const double small = average(100000, 300);
    const double large = average(1000000, 400);
    char buf[160];
    std::snprintf(buf, sizeof buf, "entries/pivot %.2f at 1e5, %.2f at 1e6 (ratio %.2f)", small, large, large / small);
    v.detail = buf;
    if (large > 3 * small) v.pass = false;
    return v;
}

// ---------------------------------------------------------------- 8

Verdict query_bound(const Corpus& c) {
    Verdict v;
    double worst = 0;
    std::size_t runs = 0;
    auto check = [&](const Text& t) {
        if (t.empty()) return;
        const auto prep = prepare(t);
        const RmqTable rmq = build_lcp_rmq(prep.idx);
        for (auto b : {PredSuccBackend::Baseline, PredSuccBackend::Veb, PredSuccBackend::YFast}) {
            const auto r = find_type1_predsucc(t, prep.idx, rmq, prep.buckets, prep.classes, b);
            const double limit = 4.0 * static_cast<double>(static_cast<std::size_t>(t.size()) + r.sagps.size());
            worst = std::max(worst, static_cast<double>(r.stats.queries) / limit);
            ++runs;
            if (static_cast<double>(r.stats.queries) > limit) v.fail("bound exceeded on " + describe(t));
        }
    };
    for (const auto& t : c.fuzz) check(t);
    for (const auto& t : c.structured) check(t);
    char buf[120];
    std::snprintf(buf, sizeof buf, "%zu runs, max queries / 4(n+occ1) = %.3f", runs, worst);
    if (v.pass) v.detail = buf;
    return v;
}

} // namespace

int main() {
    std::printf("kernels: %s\n", std::string(kernels::isa_name(kernels::active_isa())).c_str());
    std::fflush(stdout);
    const Corpus corpus = build_corpus();

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"golden examples", golden_examples},
        {"oracle equivalence", [&] { return oracle_equivalence(corpus); }},
        {"component oracles", [&] { return component_oracles(corpus); }},
        {"predecessor-structure models", predsucc_models},
        {"performance sanity", performance},
        {"near-linearity of stree", near_linearity},
        {"traversal metric growth", traversal_growth},
        {"predsucc query bound", [&] { return query_bound(corpus); }},
    };

    int failed = 0;
    for (std::size_t x = 0; x < criteria.size(); ++x) {
        Verdict v;
        try {
            v = criteria[x].second();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        failed += !v.pass;
        std::printf("criterion %zu (%s): %s - %s\n", x + 1, criteria[x].first.c_str(), v.pass ? "PASS" : "FAIL",
                    v.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
