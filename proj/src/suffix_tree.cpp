#include "sagp/suffix_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace sagp {

Index SuffixTree::add_node(Index depth, Index rep) {
    parent_.push_back(kNone);
    depth_.push_back(depth);
    first_child_.push_back(kNone);
    next_sibling_.push_back(kNone);
    rank_.push_back(0);
    rep_.push_back(rep);
    return static_cast<Index>(parent_.size()) - 1;
}

void SuffixTree::append_child(Index p, Index c, std::vector<Index>& last_child) {
    parent_[static_cast<std::size_t>(c)] = p;
    Index& last = last_child[static_cast<std::size_t>(p)];
    if (last == kNone) {
        first_child_[static_cast<std::size_t>(p)] = c;
    } else {
        next_sibling_[static_cast<std::size_t>(last)] = c;
    }
    last = c;
}

std::pair<Index, Index> SuffixTree::edge_label(Index v) const {
    if (v == root()) return {1, 0};
    const Index start = representative(v);
    return {start + depth(parent(v)), start + depth(v) - 1};
}

std::vector<Index> SuffixTree::children(Index v) const {
    std::vector<Index> out;
    for (Index c = first_child(v); c != kNone; c = next_sibling(c)) out.push_back(c);
    return out;
}

std::vector<Index> SuffixTree::preorder() const {
    std::vector<Index> order;
    order.reserve(parent_.size());
    std::vector<Index> stack{root()};
    std::vector<Index> kids;
    while (!stack.empty()) {
        Index v = stack.back();
        stack.pop_back();
        order.push_back(v);
        kids.clear();
        for (Index c = first_child(v); c != kNone; c = next_sibling(c)) kids.push_back(c);
        stack.insert(stack.end(), kids.rbegin(), kids.rend());
    }
    return order;
}

SuffixTree build_tree_from_index(const SuffixArrayIndex& idx) {
    const Index m = idx.size();
    SuffixTree tree;
    const std::size_t cap = 2 * static_cast<std::size_t>(m) + 1;
    tree.parent_.reserve(cap);
    tree.depth_.reserve(cap);
    tree.first_child_.reserve(cap);
    tree.next_sibling_.reserve(cap);
    tree.rank_.reserve(cap);
    tree.rep_.reserve(cap);
    tree.leaf_of_rank_.assign(static_cast<std::size_t>(m) + 1, SuffixTree::kNone);
    std::vector<Index> last_child;
    last_child.reserve(cap);

    auto make = [&](Index depth, Index rep) {
        last_child.push_back(SuffixTree::kNone);
        return tree.add_node(depth, rep);
    };

    const Index root = make(0, m > 0 ? idx.sa[1] : 1);
    std::vector<Index> stack{root};
    for (Index r = 1; r <= m; ++r) {
        const Index l = r == 1 ? 0 : idx.lcp[static_cast<std::size_t>(r)];
        Index last = SuffixTree::kNone;
        while (tree.depth(stack.back()) > l) {
            last = stack.back();
            stack.pop_back();
            if (tree.depth(stack.back()) >= l) {
                tree.append_child(stack.back(), last, last_child);
            } else {
                const Index mid = make(l, tree.representative(last));
                tree.append_child(mid, last, last_child);
                stack.push_back(mid);
            }
        }
        const Index start = idx.sa[static_cast<std::size_t>(r)];
        const Index leaf = make(m - start + 1, start);
        tree.rank_[static_cast<std::size_t>(leaf)] = r;
        tree.leaf_of_rank_[static_cast<std::size_t>(r)] = leaf;
        stack.push_back(leaf);
    }
    while (stack.size() > 1) {
        const Index v = stack.back();
        stack.pop_back();
        tree.append_child(stack.back(), v, last_child);
    }
    return tree;
}

LcaIndex::LcaIndex(const SuffixTree& tree) {
    order_ = tree.preorder();
    tin_.assign(order_.size(), 0);
    for (std::size_t t = 0; t < order_.size(); ++t) tin_[static_cast<std::size_t>(order_[t])] = static_cast<Index>(t);
    parent_tin_.assign(order_.size(), 0);
    for (std::size_t t = 1; t < order_.size(); ++t) {
        parent_tin_[t] = tin_[static_cast<std::size_t>(tree.parent(order_[t]))];
    }
    rmq_ = RmqTable(parent_tin_);
}

Index LcaIndex::lca(Index u, Index v) const {
    if (u == v) return u;
    Index a = tin(u);
    Index b = tin(v);
    if (a > b) std::swap(a, b);
    return order_[static_cast<std::size_t>(rmq_.min(a + 1, b))];
}

} // namespace sagp
