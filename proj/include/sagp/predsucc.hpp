#pragma once

// Insert-only dynamic integer sets over a universe [1, U] answering strict
// predecessor / successor queries. Three interchangeable backends:
//   OrderedSetBaseline  balanced search tree, O(log m)
//   VebTree             van Emde Boas tree, O(log log U) worst case, O(U) space
//   YFastTrie           x-fast trie over bucket keys + bucket trees,
//                       O(log log U) expected, O(m) space

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sagp {

using Key = std::uint32_t;

template <class S>
concept PredSuccSet = requires(S s, const S cs, Key x) {
    { s.insert(x) };
    { cs.contains(x) } -> std::same_as<bool>;
    { cs.predecessor(x) } -> std::same_as<std::optional<Key>>;
    { cs.successor(x) } -> std::same_as<std::optional<Key>>;
    { cs.universe() } -> std::same_as<Key>;
    { cs.size() } -> std::same_as<std::size_t>;
};

enum class PredSuccBackend { Baseline, Veb, YFast };

std::string_view backend_name(PredSuccBackend backend);

class OrderedSetBaseline {
public:
    explicit OrderedSetBaseline(Key universe) : universe_(universe) {}

    void insert(Key x);
    bool contains(Key x) const;
    std::optional<Key> predecessor(Key x) const;
    std::optional<Key> successor(Key x) const;
    Key universe() const { return universe_; }
    std::size_t size() const { return items_.size(); }

private:
    Key universe_;
    std::set<Key> items_;
};

class VebTree {
public:
    explicit VebTree(Key universe);
    ~VebTree();
    VebTree(VebTree&&) noexcept;
    VebTree& operator=(VebTree&&) noexcept;

    void insert(Key x);
    bool contains(Key x) const;
    std::optional<Key> predecessor(Key x) const;
    std::optional<Key> successor(Key x) const;
    Key universe() const { return universe_; }
    std::size_t size() const { return size_; }

    /// Structural size: allocated nodes plus cluster slots.
    std::size_t footprint() const;

private:
    struct Node;

    Key universe_;
    std::size_t size_ = 0;
    std::unique_ptr<Node> root_;
};

class YFastTrie {
public:
    explicit YFastTrie(Key universe);

    void insert(Key x);
    bool contains(Key x) const;
    std::optional<Key> predecessor(Key x) const;
    std::optional<Key> successor(Key x) const;
    Key universe() const { return universe_; }
    std::size_t size() const { return size_; }

    /// Structural size: x-fast trie entries over all levels plus bucket count.
    std::size_t footprint() const;
    std::size_t bucket_count() const { return leaves_.size(); }

private:
    static constexpr Key kNone = 0xFFFFFFFFu;

    struct Range {
        Key min_key;
        Key max_key;
    };
    struct Leaf {
        Key prev = kNone;
        Key next = kNone;
        std::set<Key> items;
    };

    Key successor_or_equal_key(Key x) const;
    void insert_key(Key key, Leaf leaf);

    Key universe_;
    unsigned bits_;
    std::size_t split_threshold_;
    std::size_t size_ = 0;
    std::vector<std::unordered_map<Key, Range>> levels_; // levels_[l]: prefixes of length l
    std::unordered_map<Key, Leaf> leaves_;
};

static_assert(PredSuccSet<OrderedSetBaseline>);
static_assert(PredSuccSet<VebTree>);
static_assert(PredSuccSet<YFastTrie>);

} // namespace sagp
