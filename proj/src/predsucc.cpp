#include "sagp/predsucc.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace sagp {
namespace {

void check_key(Key x, Key universe) {
    if (x < 1 || x > universe) {
        throw std::out_of_range("key " + std::to_string(x) + " outside universe [1, " +
                                std::to_string(universe) + "]");
    }
}

} // namespace

std::string_view backend_name(PredSuccBackend backend) {
    switch (backend) {
    case PredSuccBackend::Baseline: return "baseline";
    case PredSuccBackend::Veb: return "veb";
    case PredSuccBackend::YFast: return "yfast";
    }
    return "unknown";
}

// ---------------------------------------------------------------- baseline

void OrderedSetBaseline::insert(Key x) {
    check_key(x, universe_);
    items_.insert(x);
}

bool OrderedSetBaseline::contains(Key x) const {
    check_key(x, universe_);
    return items_.count(x) != 0;
}

std::optional<Key> OrderedSetBaseline::predecessor(Key x) const {
    check_key(x, universe_);
    auto it = items_.lower_bound(x);
    if (it == items_.begin()) return std::nullopt;
    return *std::prev(it);
}

std::optional<Key> OrderedSetBaseline::successor(Key x) const {
    check_key(x, universe_);
    auto it = items_.upper_bound(x);
    if (it == items_.end()) return std::nullopt;
    return *it;
}

// ---------------------------------------------------------------- vEB

// Classic van Emde Boas layout: min is kept out of the clusters, clusters and
// summary are allocated on first use. Universes of size 2 are the base case.
struct VebTree::Node {
    static constexpr Key kEmpty = 0xFFFFFFFFu;

    unsigned bits;
    Key min = kEmpty;
    Key max = kEmpty;
    std::unique_ptr<Node> summary;
    std::vector<std::unique_ptr<Node>> clusters;

    explicit Node(unsigned b) : bits(b) {
        if (bits > 1) clusters.resize(std::size_t{1} << upper_bits());
    }

    bool empty() const { return min == kEmpty; }
    unsigned lower_bits() const { return bits / 2; }
    unsigned upper_bits() const { return bits - bits / 2; }
    Key high(Key x) const { return x >> lower_bits(); }
    Key low(Key x) const { return x & ((Key{1} << lower_bits()) - 1); }
    Key join(Key h, Key l) const { return (h << lower_bits()) | l; }

    const Node* cluster(Key h) const { return clusters[h].get(); }

    Node& cluster_for_insert(Key h) {
        auto& slot = clusters[h];
        if (!slot) slot = std::make_unique<Node>(lower_bits());
        return *slot;
    }

    Node& summary_for_insert() {
        if (!summary) summary = std::make_unique<Node>(upper_bits());
        return *summary;
    }

    bool contains(Key x) const {
        if (x == min || x == max) return true;
        if (bits == 1 || empty()) return false;
        const Node* c = cluster(high(x));
        return c != nullptr && c->contains(low(x));
    }

    void insert(Key x) {
        if (empty()) {
            min = max = x;
            return;
        }
        if (x < min) std::swap(x, min);
        if (bits > 1) {
            Key h = high(x);
            Node& c = cluster_for_insert(h);
            if (c.empty()) {
                summary_for_insert().insert(h);
                c.min = c.max = low(x);
            } else {
                c.insert(low(x));
            }
        }
        if (x > max) max = x;
    }

    std::optional<Key> successor(Key x) const {
        if (empty()) return std::nullopt;
        if (bits == 1) {
            if (x == 0 && max == 1) return Key{1};
            return std::nullopt;
        }
        if (x < min) return min;
        Key h = high(x);
        const Node* c = cluster(h);
        if (c != nullptr && !c->empty() && low(x) < c->max) {
            return join(h, *c->successor(low(x)));
        }
        if (!summary) return std::nullopt;
        auto next = summary->successor(h);
        if (!next) return std::nullopt;
        return join(*next, cluster(*next)->min);
    }

    std::optional<Key> predecessor(Key x) const {
        if (empty()) return std::nullopt;
        if (bits == 1) {
            if (x == 1 && min == 0) return Key{0};
            return std::nullopt;
        }
        if (x > max) return max;
        Key h = high(x);
        const Node* c = cluster(h);
        if (c != nullptr && !c->empty() && low(x) > c->min) {
            return join(h, *c->predecessor(low(x)));
        }
        std::optional<Key> prev = summary ? summary->predecessor(h) : std::nullopt;
        if (!prev) {
            if (x > min) return min;
            return std::nullopt;
        }
        return join(*prev, cluster(*prev)->max);
    }

    std::size_t footprint() const {
        std::size_t total = 1 + clusters.size();
        if (summary) total += summary->footprint();
        for (const auto& c : clusters) {
            if (c) total += c->footprint();
        }
        return total;
    }
};

VebTree::VebTree(Key universe) : universe_(universe) {
    // Keys are stored as-is, so the internal universe must cover [0, universe].
    unsigned bits = std::bit_width(static_cast<std::uint64_t>(universe));
    root_ = std::make_unique<Node>(bits < 1 ? 1 : bits);
}

VebTree::~VebTree() = default;
VebTree::VebTree(VebTree&&) noexcept = default;
VebTree& VebTree::operator=(VebTree&&) noexcept = default;

void VebTree::insert(Key x) {
    check_key(x, universe_);
    if (root_->contains(x)) return;
    root_->insert(x);
    ++size_;
}

bool VebTree::contains(Key x) const {
    check_key(x, universe_);
    return root_->contains(x);
}

std::optional<Key> VebTree::predecessor(Key x) const {
    check_key(x, universe_);
    return root_->predecessor(x);
}

std::optional<Key> VebTree::successor(Key x) const {
    check_key(x, universe_);
    return root_->successor(x);
}

std::size_t VebTree::footprint() const { return root_->footprint(); }

// ---------------------------------------------------------------- Y-fast trie

// Buckets partition the universe into key ranges (prev_key, key]; a bucket's
// key is the largest value it may hold, and the top bucket's key is the
// largest representable value, so every x has a bucket. Keys only ever get
// added (by splitting a bucket), so the x-fast trie needs no deletion.

YFastTrie::YFastTrie(Key universe)
    : universe_(universe),
      bits_(static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(universe)))),
      split_threshold_(2 * static_cast<std::size_t>(bits_ < 1 ? 1 : bits_)),
      levels_(bits_ + 1) {
    const Key top = bits_ >= 32 ? kNone - 1 : static_cast<Key>((std::uint64_t{1} << bits_) - 1);
    insert_key(top, Leaf{});
}

Key YFastTrie::successor_or_equal_key(Key x) const {
    if (leaves_.count(x) != 0) return x;
    // Longest prefix of x present in the trie; levels_[0] holds the root.
    unsigned lo = 0;
    unsigned hi = bits_;
    while (hi - lo > 1) {
        unsigned mid = (lo + hi) / 2;
        if (levels_[mid].count(x >> (bits_ - mid)) != 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const Range& node = levels_[lo].at(x >> (bits_ - lo));
    const bool next_bit = ((x >> (bits_ - lo - 1)) & 1u) != 0;
    if (!next_bit) return node.min_key; // only the 1-subtree exists: everything is above x
    return leaves_.at(node.max_key).next;
}

void YFastTrie::insert_key(Key key, Leaf leaf) {
    if (!leaves_.empty()) {
        Key succ = successor_or_equal_key(key);
        Leaf& s = leaves_.at(succ);
        leaf.prev = s.prev;
        leaf.next = succ;
        if (s.prev != kNone) leaves_.at(s.prev).next = key;
        s.prev = key;
    }
    leaves_.emplace(key, std::move(leaf));
    for (unsigned l = 0; l < bits_; ++l) {
        auto [it, fresh] = levels_[l].try_emplace(key >> (bits_ - l), Range{key, key});
        if (!fresh) {
            if (key < it->second.min_key) it->second.min_key = key;
            if (key > it->second.max_key) it->second.max_key = key;
        }
    }
}

void YFastTrie::insert(Key x) {
    check_key(x, universe_);
    Key key = successor_or_equal_key(x);
    Leaf& bucket = leaves_.at(key);
    if (!bucket.items.insert(x).second) return;
    ++size_;
    if (bucket.items.size() <= split_threshold_) return;

    Leaf lower;
    auto middle = bucket.items.begin();
    std::advance(middle, static_cast<std::ptrdiff_t>(bucket.items.size() / 2));
    lower.items.insert(bucket.items.begin(), middle);
    bucket.items.erase(bucket.items.begin(), middle);
    Key lower_key = *lower.items.rbegin();
    insert_key(lower_key, std::move(lower));
}

bool YFastTrie::contains(Key x) const {
    check_key(x, universe_);
    return leaves_.at(successor_or_equal_key(x)).items.count(x) != 0;
}

std::optional<Key> YFastTrie::predecessor(Key x) const {
    check_key(x, universe_);
    const Leaf& bucket = leaves_.at(successor_or_equal_key(x));
    auto it = bucket.items.lower_bound(x);
    if (it != bucket.items.begin()) return *std::prev(it);
    if (bucket.prev == kNone) return std::nullopt;
    return *leaves_.at(bucket.prev).items.rbegin();
}

std::optional<Key> YFastTrie::successor(Key x) const {
    check_key(x, universe_);
    const Leaf& bucket = leaves_.at(successor_or_equal_key(x));
    auto it = bucket.items.upper_bound(x);
    if (it != bucket.items.end()) return *it;
    if (bucket.next == kNone) return std::nullopt;
    const Leaf& next = leaves_.at(bucket.next);
    if (next.items.empty()) return std::nullopt;
    return *next.items.begin();
}

std::size_t YFastTrie::footprint() const {
    std::size_t total = leaves_.size();
    for (const auto& level : levels_) total += level.size();
    return total;
}

} // namespace sagp
