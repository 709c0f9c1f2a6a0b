#pragma once

// Suffix-tree type-1 backend. T1 is the suffix tree of T' = T $ rev(T) #,
// T2 the suffix tree of rev(T) #. A node of T1 is marked at frontier b when
// its subtree holds a reversed-half leaf whose occurrence ends at or before
// b - 2; the deepest marked ancestor of the query leaf has string depth W.
// The matching occurrences are then read off a growing suffix tree of
// rev(T)[k..n] # that holds exactly the suffixes with k >= n + 3 - b.

#include <vector>

#include "sagp/classify.hpp"
#include "sagp/core.hpp"
#include "sagp/palindromes.hpp"
#include "sagp/suffix_tree.hpp"
#include "sagp/text_index.hpp"

namespace sagp {

struct MarkState {
    std::vector<Index> mark_time; ///< per T1 node; kInfinity when never marked
    std::vector<Index> witness;   ///< T' position of the earliest reversed leaf below, 0 if none

    bool marked(Index v, Index b) const { return mark_time[static_cast<std::size_t>(v)] <= b; }
};

/// One pass in reverse preorder; `n` is the length of T.
MarkState compute_marks(const SuffixTree& tree1, Index n);

struct NmaAnswer {
    Index node = SuffixTree::kNone;
    Index depth = 0;
};

/// Online nearest marked ancestor by binary lifting over mark_time, which
/// never increases towards the root. O(log m) per query.
class MarkedAncestorLifting {
public:
    MarkedAncestorLifting(const SuffixTree& tree, const MarkState& marks);

    NmaAnswer query(Index v, Index b) const;

private:
    const SuffixTree* tree_;
    const MarkState* marks_;
    std::vector<std::vector<Index>> up_;
};

NmaAnswer nma_query(const MarkedAncestorLifting& lifting, Index leaf, Index b);

struct NmaRequest {
    Index node;
    Index b;
};

/// Answers all requests at once, sweeping b downwards and merging nodes
/// into their parent's component as they get unmarked (disjoint-set forest).
/// Requests must satisfy 1 <= b <= max_b.
std::vector<NmaAnswer> nma_offline(const SuffixTree& tree, const MarkState& marks,
                                   const std::vector<NmaRequest>& requests, Index max_b);

/// Suffix tree of rev(T)[k..n] # maintained while k decreases.
class GrowingTree {
public:
    static constexpr Index kNone = -1;

    /// Starts with the root and the leaf of the lone terminator (k = n + 1).
    explicit GrowingTree(Index n);

    Index text_size() const { return n_; }
    /// Smallest suffix start currently stored.
    Index front() const { return front_; }
    Index node_count() const { return static_cast<Index>(parent_.size()); }
    Index root() const { return 0; }

    Index parent(Index v) const { return parent_[static_cast<std::size_t>(v)]; }
    Index depth(Index v) const { return depth_[static_cast<std::size_t>(v)]; }
    Index first_child(Index v) const { return first_child_[static_cast<std::size_t>(v)]; }
    Index next_sibling(Index v) const { return next_[static_cast<std::size_t>(v)]; }
    /// Suffix start of a leaf, 0 for internal nodes.
    Index leaf_position(Index v) const { return leaf_pos_[static_cast<std::size_t>(v)]; }
    Index leaf_of(Index k) const { return leaf_of_[static_cast<std::size_t>(k)]; }

    /// Adds the leaf for suffix k, whose string depth is n + 2 - k. The new
    /// leaf hangs below the node of string depth `branch_depth` on the path
    /// to `neighbour`, immediately after it when `after` holds.
    void attach(Index k, Index neighbour_leaf, Index branch_depth, bool after);

private:
    Index add_node(Index depth, Index pos);
    void link_after(Index anchor, Index v);
    void link_before(Index anchor, Index v);
    void replace(Index old_node, Index new_node);

    Index n_;
    Index front_;
    std::vector<Index> parent_;
    std::vector<Index> depth_;
    std::vector<Index> first_child_;
    std::vector<Index> last_child_;
    std::vector<Index> prev_;
    std::vector<Index> next_;
    std::vector<Index> leaf_pos_;
    std::vector<Index> leaf_of_;
};

/// T2 with the auxiliary tables needed to grow the tree.
struct ReversedIndex {
    SuffixArrayIndex idx;
    SuffixTree tree;
    LcaIndex lca;
    PlvNlv bounds;

    Index lcp_of_ranks(Index a, Index b) const {
        return tree.depth(lca.lca(tree.leaf_of_rank(a), tree.leaf_of_rank(b)));
    }
};

ReversedIndex build_reversed_index(const Text& text);

/// Inserts suffix k = g.front() - 1. Throws std::logic_error when k is out of
/// range for the reversed index.
void grow_insert_leaf(GrowingTree& g, const ReversedIndex& rev, Index k);

/// Climbs from the witness leaf to the highest node of string depth >= w and
/// emits one Sagp per leaf below it.
void enumerate_occurrences(const GrowingTree& g, Index witness_k, Index w, Index b, Index pivot,
                           Index radius, std::vector<Sagp>& out);

std::vector<Sagp> find_type1_stree(const Text& text, const SuffixArrayIndex& idx,
                                   const PalBuckets& buckets, const PivotClasses& classes);

} // namespace sagp
