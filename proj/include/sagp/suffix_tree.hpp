#pragma once

#include <utility>
#include <vector>

#include "sagp/core.hpp"
#include "sagp/text_index.hpp"

namespace sagp {

/// Static suffix tree built from SA + LCP. Node 0 is the root; nodes are
/// stored structure-of-arrays and children are kept left to right in SA order.
class SuffixTree {
public:
    static constexpr Index kNone = -1;

    Index node_count() const { return static_cast<Index>(parent_.size()); }
    Index root() const { return 0; }

    Index parent(Index v) const { return parent_[static_cast<std::size_t>(v)]; }
    /// String depth.
    Index depth(Index v) const { return depth_[static_cast<std::size_t>(v)]; }
    Index first_child(Index v) const { return first_child_[static_cast<std::size_t>(v)]; }
    Index next_sibling(Index v) const { return next_sibling_[static_cast<std::size_t>(v)]; }
    bool is_leaf(Index v) const { return first_child(v) == kNone; }
    /// SA rank of a leaf, 0 for internal nodes.
    Index rank(Index v) const { return rank_[static_cast<std::size_t>(v)]; }
    Index leaf_of_rank(Index r) const { return leaf_of_rank_[static_cast<std::size_t>(r)]; }
    /// Start position of some suffix in the subtree of v.
    Index representative(Index v) const { return rep_[static_cast<std::size_t>(v)]; }
    /// Closed 1-based range of the subject spelling the edge into v.
    std::pair<Index, Index> edge_label(Index v) const;

    std::vector<Index> children(Index v) const;
    std::vector<Index> preorder() const;

private:
    friend SuffixTree build_tree_from_index(const SuffixArrayIndex& idx);

    Index add_node(Index depth, Index rep);
    void append_child(Index p, Index c, std::vector<Index>& last_child);

    std::vector<Index> parent_;
    std::vector<Index> depth_;
    std::vector<Index> first_child_;
    std::vector<Index> next_sibling_;
    std::vector<Index> rank_;
    std::vector<Index> rep_;
    std::vector<Index> leaf_of_rank_;
};

/// Stack construction over the LCP array, O(m).
SuffixTree build_tree_from_index(const SuffixArrayIndex& idx);

/// Constant-time LCA: preorder numbering plus a sparse table over the
/// preorder numbers of parents. For u != v with tin[u] < tin[v] the LCA is
/// the node whose tin is the minimum of parent-tin over (tin[u], tin[v]].
class LcaIndex {
public:
    LcaIndex() = default;
    explicit LcaIndex(const SuffixTree& tree);

    Index lca(Index u, Index v) const;
    Index tin(Index v) const { return tin_[static_cast<std::size_t>(v)]; }

private:
    std::vector<Index> tin_;
    std::vector<Index> order_;
    std::vector<Index> parent_tin_;
    RmqTable rmq_;
};

} // namespace sagp
