#pragma once

#include <span>
#include <vector>

#include "sagp/core.hpp"

namespace sagp {

/// Suffix array, inverse suffix array and LCP array of an integer sequence
/// whose last symbol is unique and strictly smallest. All arrays are 1-based.
struct SuffixArrayIndex {
    std::vector<Index> subject; ///< the indexed sequence, 1-based
    std::vector<Index> sa;
    std::vector<Index> isa;
    std::vector<Index> lcp; ///< lcp[1] = -1

    Index size() const { return static_cast<Index>(sa.size()) - 1; }
    Index suffix_length(Index rank) const { return size() - sa[rank] + 1; }
};

/// `seq` is 0-based here (the caller's natural layout); the result is 1-based.
/// Throws std::invalid_argument on an empty sequence or a terminal symbol that
/// is not unique and strictly smallest, or on negative symbols.
SuffixArrayIndex build_index(std::span<const Index> seq);

inline SuffixArrayIndex build_index(const AugmentedText& aug) {
    return build_index(std::span<const Index>(aug.tprime).subspan(1));
}

/// Sparse table over an integer array: O(1) index-of-minimum queries on
/// closed ranges. Ties resolve to the leftmost candidate of the two probes.
class RmqTable {
public:
    RmqTable() = default;
    /// Indices passed to queries are indices into `values`.
    explicit RmqTable(std::span<const Index> values);

    Index argmin(Index i, Index j) const;
    Index min(Index i, Index j) const { return values_[static_cast<std::size_t>(argmin(i, j))]; }
    Index size() const { return static_cast<Index>(values_.size()); }

private:
    std::vector<Index> values_;
    std::vector<std::vector<Index>> levels_; // levels_[k - 1]: windows of width 2^k
};

/// Sparse table over idx.lcp.
inline RmqTable build_lcp_rmq(const SuffixArrayIndex& idx) { return RmqTable(idx.lcp); }

/// lcp of the suffixes ranked a and b; the suffix length when a == b.
/// Throws std::out_of_range for ranks outside [1, m].
Index range_lcp(const SuffixArrayIndex& idx, const RmqTable& rmq, Index a, Index b);

/// End position in T of the reversed-prefix occurrence starting at T'
/// position j: 2n - j + 2. Throws std::out_of_range unless n+2 <= j <= 2n+1.
Index op_map(Index n, Index j);

/// Previous / next SA entry holding a larger suffix start. 1-based over ranks
/// [1, m]; "none" is 0 for plv and m + 1 for nlv.
struct PlvNlv {
    std::vector<Index> plv;
    std::vector<Index> nlv;
};

PlvNlv build_plv_nlv(const SuffixArrayIndex& idx);

} // namespace sagp
