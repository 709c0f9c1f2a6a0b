#pragma once

// Type-1 canonical longest SAGPs. For a type-1 pivot i with radius P = pals[i]
// and begin position b = i - P + 1, u rev(u) is the maximal palindrome and
// rev(w) is the longest prefix of T[i+P+1 ..] whose reverse ends at some
// position e <= b - 2; each such e yields gap b - e - 1.
//
// All backends run over the index of T' = T $ rev(T) #. An SA entry t is
// "active" for b when sa[t] lies in the reversed half and op(sa[t]) < b - 1,
// i.e. 2n + 3 - b < sa[t] <= 2n + 1.

#include <cstddef>
#include <vector>

#include "sagp/classify.hpp"
#include "sagp/core.hpp"
#include "sagp/palindromes.hpp"
#include "sagp/predsucc.hpp"
#include "sagp/text_index.hpp"

namespace sagp {

/// Baseline: for every gap G, W(G) by one RMQ over the LCP array. O(n^2).
std::vector<Sagp> find_type1_naive(const Text& text, const SuffixArrayIndex& idx,
                                   const RmqTable& rmq, const PalsArray& pals,
                                   const PivotClasses& classes);

struct TraversalStats {
    std::size_t entries_scanned = 0;
    std::size_t pivots_processed = 0;
    std::size_t outputs = 0;

    double entries_per_pivot() const {
        return pivots_processed ? static_cast<double>(entries_scanned) / static_cast<double>(pivots_processed) : 0.0;
    }
    double entries_per_output() const {
        return outputs ? static_cast<double>(entries_scanned) / static_cast<double>(outputs) : 0.0;
    }
};

struct TraverseResult {
    std::vector<Sagp> sagps;
    TraversalStats stats;
};

/// Scans the SA outward from the query suffix to the nearest active entries,
/// then sweeps each side that attains the best lcp. Quadratic worst case.
TraverseResult find_type1_traverse(const Text& text, const SuffixArrayIndex& idx,
                                   const PalsArray& pals, const PivotClasses& classes);

struct QueryStats {
    std::size_t queries = 0;
    std::size_t insertions = 0;
};

/// The active-entry set for the current frontier b. Advancing from b to b+1
/// adds the single entry whose reversed-prefix occurrence ends at b - 1.
template <PredSuccSet Set>
class ActiveSet {
public:
    ActiveSet(const SuffixArrayIndex& idx, Index n)
        : idx_(&idx), n_(n), set_(static_cast<Key>(2 * n + 2)) {}

    Index frontier() const { return frontier_; }

    void advance() {
        if (frontier_ >= 2) {
            set_.insert(static_cast<Key>(idx_->isa[static_cast<std::size_t>(2 * n_ + 3 - frontier_)]));
            ++stats_.insertions;
        }
        ++frontier_;
    }

    std::optional<Key> predecessor(Key x) {
        ++stats_.queries;
        return set_.predecessor(x);
    }
    std::optional<Key> successor(Key x) {
        ++stats_.queries;
        return set_.successor(x);
    }

    const Set& set() const { return set_; }
    const QueryStats& stats() const { return stats_; }

private:
    const SuffixArrayIndex* idx_;
    Index n_;
    Set set_;
    Index frontier_ = 1;
    QueryStats stats_;
};

struct PredSuccResult {
    std::vector<Sagp> sagps;
    QueryStats stats;
};

PredSuccResult find_type1_predsucc(const Text& text, const SuffixArrayIndex& idx,
                                   const RmqTable& rmq, const PalBuckets& buckets, const PivotClasses& classes,
                                   PredSuccBackend backend);

} // namespace sagp
