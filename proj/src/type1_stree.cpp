#include "sagp/type1_stree.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sagp {

MarkState compute_marks(const SuffixTree& tree1, Index n) {
    const auto count = static_cast<std::size_t>(tree1.node_count());
    MarkState marks;
    marks.mark_time.assign(count, kInfinity);
    marks.witness.assign(count, 0);
    const auto order = tree1.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Index v = *it;
        const auto sv = static_cast<std::size_t>(v);
        if (tree1.is_leaf(v)) {
            const Index j = tree1.representative(v);
            if (j >= n + 2 && j <= 2 * n + 1) {
                marks.mark_time[sv] = op_map(n, j) + 2;
                marks.witness[sv] = j;
            }
        }
        if (v != tree1.root()) {
            const auto sp = static_cast<std::size_t>(tree1.parent(v));
            if (marks.mark_time[sv] < marks.mark_time[sp]) {
                marks.mark_time[sp] = marks.mark_time[sv];
                marks.witness[sp] = marks.witness[sv];
            }
        }
    }
    return marks;
}

// ---------------------------------------------------------------- NMA

MarkedAncestorLifting::MarkedAncestorLifting(const SuffixTree& tree, const MarkState& marks)
    : tree_(&tree), marks_(&marks) {
    const auto count = static_cast<std::size_t>(tree.node_count());
    const int levels = std::max(1, static_cast<int>(std::bit_width(count)));
    up_.assign(static_cast<std::size_t>(levels), std::vector<Index>(count, tree.root()));
    for (std::size_t v = 1; v < count; ++v) up_[0][v] = tree.parent(static_cast<Index>(v));
    for (std::size_t j = 1; j < up_.size(); ++j) {
        for (std::size_t v = 0; v < count; ++v) {
            up_[j][v] = up_[j - 1][static_cast<std::size_t>(up_[j - 1][v])];
        }
    }
}

NmaAnswer MarkedAncestorLifting::query(Index v, Index b) const {
    if (marks_->marked(v, b)) return {v, tree_->depth(v)};
    for (std::size_t j = up_.size(); j-- > 0;) {
        const Index u = up_[j][static_cast<std::size_t>(v)];
        if (!marks_->marked(u, b)) v = u;
    }
    if (v == tree_->root()) return {};
    const Index p = tree_->parent(v);
    if (!marks_->marked(p, b)) return {};
    return {p, tree_->depth(p)};
}

NmaAnswer nma_query(const MarkedAncestorLifting& lifting, Index leaf, Index b) {
    return lifting.query(leaf, b);
}

std::vector<NmaAnswer> nma_offline(const SuffixTree& tree, const MarkState& marks,
                                   const std::vector<NmaRequest>& requests, Index max_b) {
    const auto count = static_cast<std::size_t>(tree.node_count());
    std::vector<Index> link(count);
    std::vector<Index> size(count, 1);
    std::vector<Index> label(count);
    std::iota(link.begin(), link.end(), 0);
    std::iota(label.begin(), label.end(), 0);

    auto find = [&](Index v) {
        while (link[static_cast<std::size_t>(v)] != v) {
            auto& l = link[static_cast<std::size_t>(v)];
            l = link[static_cast<std::size_t>(l)];
            v = l;
        }
        return v;
    };
    auto merge_up = [&](Index v) {
        Index a = find(v);
        Index c = find(tree.parent(v));
        const Index lab = label[static_cast<std::size_t>(c)];
        if (size[static_cast<std::size_t>(a)] > size[static_cast<std::size_t>(c)]) std::swap(a, c);
        link[static_cast<std::size_t>(a)] = c;
        size[static_cast<std::size_t>(c)] += size[static_cast<std::size_t>(a)];
        label[static_cast<std::size_t>(c)] = lab;
    };

    // CSR buckets: nodes by mark_time, requests by b
    const auto slots = static_cast<std::size_t>(max_b) + 2;
    std::vector<Index> node_off(slots, 0);
    std::vector<Index> req_off(slots, 0);
    for (std::size_t v = 1; v < count; ++v) {
        const Index t = marks.mark_time[v];
        if (t > max_b) {
            merge_up(static_cast<Index>(v));
        } else {
            ++node_off[static_cast<std::size_t>(t) + 1];
        }
    }
    for (const auto& r : requests) {
        if (r.b < 1 || r.b > max_b) {
            throw std::out_of_range("nma request frontier " + std::to_string(r.b) + " out of range");
        }
        ++req_off[static_cast<std::size_t>(r.b) + 1];
    }
    std::partial_sum(node_off.begin(), node_off.end(), node_off.begin());
    std::partial_sum(req_off.begin(), req_off.end(), req_off.begin());
    std::vector<Index> nodes(static_cast<std::size_t>(node_off.back()));
    std::vector<Index> reqs(requests.size());
    {
        auto fill = node_off;
        for (std::size_t v = 1; v < count; ++v) {
            const Index t = marks.mark_time[v];
            if (t <= max_b) nodes[static_cast<std::size_t>(fill[static_cast<std::size_t>(t)]++)] = static_cast<Index>(v);
        }
        fill = req_off;
        for (std::size_t q = 0; q < requests.size(); ++q) {
            reqs[static_cast<std::size_t>(fill[static_cast<std::size_t>(requests[q].b)]++)] = static_cast<Index>(q);
        }
    }

    std::vector<NmaAnswer> answers(requests.size());
    for (Index b = max_b; b >= 1; --b) {
        const auto sb = static_cast<std::size_t>(b);
        for (Index x = req_off[sb]; x < req_off[sb + 1]; ++x) {
            const auto q = static_cast<std::size_t>(reqs[static_cast<std::size_t>(x)]);
            const Index lab = label[static_cast<std::size_t>(find(requests[q].node))];
            if (marks.marked(lab, b)) answers[q] = {lab, tree.depth(lab)};
        }
        for (Index x = node_off[sb]; x < node_off[sb + 1]; ++x) merge_up(nodes[static_cast<std::size_t>(x)]);
    }
    return answers;
}

// ---------------------------------------------------------------- growing tree

GrowingTree::GrowingTree(Index n) : n_(n), front_(n + 1) {
    const auto cap = 2 * static_cast<std::size_t>(n) + 4;
    parent_.reserve(cap);
    depth_.reserve(cap);
    first_child_.reserve(cap);
    last_child_.reserve(cap);
    prev_.reserve(cap);
    next_.reserve(cap);
    leaf_pos_.reserve(cap);
    leaf_of_.assign(static_cast<std::size_t>(n) + 2, kNone);
    const Index root = add_node(0, 0);
    const Index leaf = add_node(1, n + 1);
    parent_[static_cast<std::size_t>(leaf)] = root;
    first_child_[static_cast<std::size_t>(root)] = leaf;
    last_child_[static_cast<std::size_t>(root)] = leaf;
}

Index GrowingTree::add_node(Index depth, Index pos) {
    parent_.push_back(kNone);
    depth_.push_back(depth);
    first_child_.push_back(kNone);
    last_child_.push_back(kNone);
    prev_.push_back(kNone);
    next_.push_back(kNone);
    leaf_pos_.push_back(pos);
    const Index v = static_cast<Index>(parent_.size()) - 1;
    if (pos > 0) leaf_of_[static_cast<std::size_t>(pos)] = v;
    return v;
}

void GrowingTree::link_after(Index anchor, Index v) {
    const auto sa = static_cast<std::size_t>(anchor);
    const auto sv = static_cast<std::size_t>(v);
    const Index p = parent_[sa];
    parent_[sv] = p;
    prev_[sv] = anchor;
    next_[sv] = next_[sa];
    if (next_[sa] != kNone) {
        prev_[static_cast<std::size_t>(next_[sa])] = v;
    } else {
        last_child_[static_cast<std::size_t>(p)] = v;
    }
    next_[sa] = v;
}

void GrowingTree::link_before(Index anchor, Index v) {
    const auto sa = static_cast<std::size_t>(anchor);
    const auto sv = static_cast<std::size_t>(v);
    const Index p = parent_[sa];
    parent_[sv] = p;
    next_[sv] = anchor;
    prev_[sv] = prev_[sa];
    if (prev_[sa] != kNone) {
        next_[static_cast<std::size_t>(prev_[sa])] = v;
    } else {
        first_child_[static_cast<std::size_t>(p)] = v;
    }
    prev_[sa] = v;
}

void GrowingTree::replace(Index old_node, Index new_node) {
    const auto so = static_cast<std::size_t>(old_node);
    const auto sn = static_cast<std::size_t>(new_node);
    const Index p = parent_[so];
    parent_[sn] = p;
    prev_[sn] = prev_[so];
    next_[sn] = next_[so];
    if (prev_[so] != kNone) {
        next_[static_cast<std::size_t>(prev_[so])] = new_node;
    } else {
        first_child_[static_cast<std::size_t>(p)] = new_node;
    }
    if (next_[so] != kNone) {
        prev_[static_cast<std::size_t>(next_[so])] = new_node;
    } else {
        last_child_[static_cast<std::size_t>(p)] = new_node;
    }
    parent_[so] = new_node;
    prev_[so] = kNone;
    next_[so] = kNone;
    first_child_[sn] = old_node;
    last_child_[sn] = old_node;
}

void GrowingTree::attach(Index k, Index neighbour_leaf, Index branch_depth, bool after) {
    Index y = neighbour_leaf;
    while (depth(parent(y)) > branch_depth) y = parent(y);
    const Index leaf = add_node(n_ + 2 - k, k);
    if (depth(parent(y)) < branch_depth) {
        const Index mid = add_node(branch_depth, 0);
        replace(y, mid);
    }
    if (after) {
        link_after(y, leaf);
    } else {
        link_before(y, leaf);
    }
    front_ = k;
}

ReversedIndex build_reversed_index(const Text& text) {
    ReversedIndex rev;
    const auto seq = reversed_with_terminator(text);
    rev.idx = build_index(std::span<const Index>(seq).subspan(1));
    rev.tree = build_tree_from_index(rev.idx);
    rev.lca = LcaIndex(rev.tree);
    rev.bounds = build_plv_nlv(rev.idx);
    return rev;
}

void grow_insert_leaf(GrowingTree& g, const ReversedIndex& rev, Index k) {
    const Index n = g.text_size();
    if (k < 1 || k > n || rev.idx.size() != n + 1) {
        throw std::logic_error("cannot insert suffix " + std::to_string(k) + " into growing tree");
    }
    if (k != g.front() - 1) {
        throw std::logic_error("growing tree expects suffix " + std::to_string(g.front() - 1) +
                               ", got " + std::to_string(k));
    }
    const Index m = rev.idx.size();
    const Index r = rev.idx.isa[static_cast<std::size_t>(k)];
    const Index pl = rev.bounds.plv[static_cast<std::size_t>(r)];
    const Index nl = rev.bounds.nlv[static_cast<std::size_t>(r)];
    // the terminator has rank 1 and a larger start than k, so pl >= 1
    const Index left = rev.lcp_of_ranks(pl, r);
    const Index right = nl <= m ? rev.lcp_of_ranks(r, nl) : -1;
    if (left >= right) {
        g.attach(k, g.leaf_of(rev.idx.sa[static_cast<std::size_t>(pl)]), left, true);
    } else {
        g.attach(k, g.leaf_of(rev.idx.sa[static_cast<std::size_t>(nl)]), right, false);
    }
}

void enumerate_occurrences(const GrowingTree& g, Index witness_k, Index w, Index b, Index pivot,
                           Index radius, std::vector<Sagp>& out) {
    const Index n = g.text_size();
    Index top = g.leaf_of(witness_k);
    while (g.parent(top) != GrowingTree::kNone && g.depth(g.parent(top)) >= w) top = g.parent(top);

    Index v = top;
    while (true) {
        if (g.first_child(v) != GrowingTree::kNone) {
            v = g.first_child(v);
            continue;
        }
        const Index end = n + 1 - g.leaf_position(v);
        out.push_back({pivot, w, b - end - 1, radius, PivotType::Type1});
        while (v != top && g.next_sibling(v) == GrowingTree::kNone) v = g.parent(v);
        if (v == top) break;
        v = g.next_sibling(v);
    }
}

std::vector<Sagp> find_type1_stree(const Text& text, const SuffixArrayIndex& idx,
                                   const PalBuckets& buckets, const PivotClasses& classes) {
    const Index n = text.size();
    struct Pending {
        Index pivot;
        Index radius;
        Index b;
    };
    std::vector<Pending> pending;
    std::vector<NmaRequest> requests;
    for (Index b = 1; b <= n; ++b) {
        for (Index radius : buckets.at(b)) {
            const Index i = b + radius - 1;
            if (!classes.is_type1(i)) continue;
            pending.push_back({i, radius, b});
        }
    }

    std::vector<Index> widths(pending.size(), 0);
    std::vector<Index> witnesses(pending.size(), 0);
    {
        const SuffixTree tree1 = build_tree_from_index(idx);
        const MarkState marks = compute_marks(tree1, n);
        requests.reserve(pending.size());
        for (const auto& p : pending) {
            const Index k = idx.isa[static_cast<std::size_t>(p.pivot + p.radius + 1)];
            requests.push_back({tree1.leaf_of_rank(k), p.b});
        }
        const auto answers = nma_offline(tree1, marks, requests, n);
        for (std::size_t x = 0; x < pending.size(); ++x) {
            if (answers[x].node == SuffixTree::kNone) continue;
            widths[x] = answers[x].depth;
            witnesses[x] = marks.witness[static_cast<std::size_t>(answers[x].node)];
        }
    }

    const ReversedIndex rev = build_reversed_index(text);
    GrowingTree g(n);
    std::vector<Sagp> out;
    for (std::size_t x = 0; x < pending.size(); ++x) {
        const auto& p = pending[x];
        if (widths[x] < 1) continue;
        const Index floor = std::max<Index>(1, n + 3 - p.b);
        while (g.front() > floor) grow_insert_leaf(g, rev, g.front() - 1);
        enumerate_occurrences(g, witnesses[x] - n - 1, widths[x], p.b, p.pivot, p.radius, out);
    }
    sort_canonical(out);
    return out;
}

} // namespace sagp
