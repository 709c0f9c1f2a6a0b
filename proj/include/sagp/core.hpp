#pragma once

// Shared domain types for single-arm-gapped palindromes (SAGPs) of the form
// w g u rev(u) rev(w), with |w|, |g|, |u| >= 1.
//
// Indexing convention used across the library: every array indexed by a
// string position or a suffix-array rank is 1-based and sized (length + 1);
// slot 0 is unused. This keeps the position arithmetic (op(j) = 2n - j + 2,
// gap = b - end - 1, ...) literal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace sagp {

using Index = std::int32_t;
using Symbol = std::uint64_t;

inline constexpr Index kInfinity = std::numeric_limits<Index>::max();

// Sentinel ranks for T' = T $ rev(T) #.
inline constexpr Index kHashRank = 0;
inline constexpr Index kDollarRank = 1;
inline constexpr Index kFirstTextRank = 2;

/// Input string with an order-preserving rank remap onto [2, sigma + 1].
class Text {
public:
    Text() = default;

    static Text from_bytes(std::string_view bytes);
    static Text from_symbols(std::span<const Symbol> symbols);

    Index size() const { return static_cast<Index>(raw_.size()); }
    Index sigma() const { return sigma_; }
    bool empty() const { return raw_.empty(); }

    /// Symbols as read, 0-based.
    const std::vector<Symbol>& raw() const { return raw_; }
    /// 1-based ranks; ranks()[0] is unused.
    const std::vector<Index>& ranks() const { return ranks_; }
    Index operator[](Index i) const { return ranks_[static_cast<std::size_t>(i)]; }

private:
    std::vector<Symbol> raw_;
    std::vector<Index> ranks_{0};
    Index sigma_ = 0;
};

/// T' = ranks(T) . [$] . reverse(ranks(T)) . [#], 1-based, length 2n + 2.
struct AugmentedText {
    std::vector<Index> tprime;
    Index n = 0;

    Index size() const { return 2 * n + 2; }
};

AugmentedText augment(const Text& text);

/// ranks(rev(T)) . [#], 1-based, length n + 1.
std::vector<Index> reversed_with_terminator(const Text& text);

enum class PivotType : std::uint8_t { Type1 = 1, Type2 = 2 };

/// Quadruple (pivot, |w|, |g|, |u|) plus the type of its pivot.
struct Sagp {
    Index pivot = 0;
    Index w_len = 0;
    Index gap_len = 0;
    Index u_len = 0;
    PivotType kind = PivotType::Type2;

    Index start() const { return pivot - u_len - gap_len - w_len + 1; }
    Index end() const { return pivot + u_len + w_len; }

    friend bool operator==(const Sagp&, const Sagp&) = default;
};

/// Total order by (pivot, gap_len, w_len, u_len).
std::strong_ordering canonical_order(const Sagp& a, const Sagp& b);

struct CanonicalLess {
    bool operator()(const Sagp& a, const Sagp& b) const { return canonical_order(a, b) < 0; }
};

void sort_canonical(std::vector<Sagp>& sagps);

bool validate_sagp(const Text& text, const Sagp& s);

/// Canonical longest SAGPs for every pivot of a string.
struct SagpReport {
    Index n = 0;
    /// 1-based pivot types; pivots without any SAGP are Type2.
    std::vector<PivotType> types;
    /// All outputs in canonical order.
    std::vector<Sagp> sagps;
    std::size_t occ1 = 0;
    std::size_t occ2 = 0;

    std::span<const Sagp> at(Index pivot) const;

    friend bool operator==(const SagpReport&, const SagpReport&) = default;
};

/// Merges per-type outputs into a report. `types` is 1-based.
SagpReport make_report(Index n, std::vector<PivotType> types, std::vector<Sagp> type1,
                       std::vector<Sagp> type2);

} // namespace sagp
