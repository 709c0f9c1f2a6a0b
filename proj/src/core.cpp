#include "sagp/core.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sagp {

Text Text::from_bytes(std::string_view bytes) {
    Text text;
    text.raw_.reserve(bytes.size());
    std::array<bool, 256> seen{};
    for (char c : bytes) {
        auto byte = static_cast<unsigned char>(c);
        text.raw_.push_back(byte);
        seen[byte] = true;
    }
    if (bytes.size() >= static_cast<std::size_t>(kInfinity / 2 - 2)) {
        throw std::length_error("input too long for 32-bit positions");
    }

    std::array<Index, 256> rank{};
    Index next = kFirstTextRank;
    for (std::size_t c = 0; c < seen.size(); ++c) {
        if (seen[c]) rank[c] = next++;
    }
    text.sigma_ = next - kFirstTextRank;

    text.ranks_.resize(bytes.size() + 1);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        text.ranks_[i + 1] = rank[text.raw_[i]];
    }
    return text;
}

Text Text::from_symbols(std::span<const Symbol> symbols) {
    Text text;
    if (symbols.size() >= static_cast<std::size_t>(kInfinity / 2 - 2)) {
        throw std::length_error("input too long for 32-bit positions");
    }
    text.raw_.assign(symbols.begin(), symbols.end());

    std::vector<Symbol> alphabet(symbols.begin(), symbols.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    text.sigma_ = static_cast<Index>(alphabet.size());

    text.ranks_.resize(symbols.size() + 1);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        auto it = std::lower_bound(alphabet.begin(), alphabet.end(), symbols[i]);
        text.ranks_[i + 1] = kFirstTextRank + static_cast<Index>(it - alphabet.begin());
    }
    return text;
}

AugmentedText augment(const Text& text) {
    const Index n = text.size();
    AugmentedText aug;
    aug.n = n;
    aug.tprime.resize(static_cast<std::size_t>(2 * n + 3));
    for (Index i = 1; i <= n; ++i) {
        aug.tprime[i] = text[i];
        aug.tprime[2 * n + 2 - i] = text[i];
    }
    aug.tprime[n + 1] = kDollarRank;
    aug.tprime[2 * n + 2] = kHashRank;
    return aug;
}

std::vector<Index> reversed_with_terminator(const Text& text) {
    const Index n = text.size();
    std::vector<Index> rev(static_cast<std::size_t>(n + 2));
    for (Index k = 1; k <= n; ++k) rev[k] = text[n + 1 - k];
    rev[n + 1] = kHashRank;
    return rev;
}

std::strong_ordering canonical_order(const Sagp& a, const Sagp& b) {
    if (auto c = a.pivot <=> b.pivot; c != 0) return c;
    if (auto c = a.gap_len <=> b.gap_len; c != 0) return c;
    if (auto c = a.w_len <=> b.w_len; c != 0) return c;
    return a.u_len <=> b.u_len;
}

void sort_canonical(std::vector<Sagp>& sagps) {
    std::sort(sagps.begin(), sagps.end(), CanonicalLess{});
}

bool validate_sagp(const Text& text, const Sagp& s) {
    if (s.w_len < 1 || s.gap_len < 1 || s.u_len < 1) return false;
    const std::int64_t n = text.size();
    const std::int64_t pivot = s.pivot;
    const std::int64_t start = pivot - s.u_len - s.gap_len - s.w_len + 1;
    const std::int64_t end = pivot + s.u_len + s.w_len;
    if (pivot < 1 || pivot > n || start < 1 || end > n) return false;

    auto at = [&](std::int64_t i) { return text[static_cast<Index>(i)]; };
    for (std::int64_t j = 1; j <= s.u_len; ++j) {
        if (at(pivot - j + 1) != at(pivot + j)) return false;
    }
    for (std::int64_t x = 0; x < s.w_len; ++x) {
        if (at(start + x) != at(end - x)) return false;
    }
    return true;
}

std::span<const Sagp> SagpReport::at(Index pivot) const {
    auto lo = std::lower_bound(sagps.begin(), sagps.end(), pivot,
                               [](const Sagp& s, Index p) { return s.pivot < p; });
    auto hi = std::upper_bound(lo, sagps.end(), pivot,
                               [](Index p, const Sagp& s) { return p < s.pivot; });
    return {lo, hi};
}

SagpReport make_report(Index n, std::vector<PivotType> types, std::vector<Sagp> type1,
                       std::vector<Sagp> type2) {
    SagpReport report;
    report.n = n;
    report.types = std::move(types);
    report.occ1 = type1.size();
    report.occ2 = type2.size();
    report.sagps = std::move(type1);
    report.sagps.insert(report.sagps.end(), type2.begin(), type2.end());
    sort_canonical(report.sagps);
    return report;
}

} // namespace sagp
