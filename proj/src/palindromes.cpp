#include "sagp/palindromes.hpp"

#include <algorithm>

namespace sagp {

PalsArray compute_pals(const Text& text) {
    const Index n = text.size();
    PalsArray out;
    out.pals.assign(static_cast<std::size_t>(n) + 1, 0);
    // [left, right] is the rightmost-reaching palindrome found so far; for
    // left-center c it spans T[c-r+1 .. c+r].
    Index left = 1;
    Index right = 0;
    for (Index c = 1; c < n; ++c) {
        Index r = 0;
        if (c < right) {
            Index mirror = left + right - c - 1;
            r = std::min(out.pals[mirror], right - c);
        }
        while (c + r + 1 <= n && c - r >= 1 && text[c + r + 1] == text[c - r]) ++r;
        out.pals[c] = r;
        if (c + r > right) {
            left = c - r + 1;
            right = c + r;
        }
    }
    return out;
}

PalBuckets::PalBuckets(const PalsArray& pals) {
    const Index n = pals.size();
    offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (Index i = 1; i <= n; ++i) {
        if (pals[i] >= 1) ++offsets_[static_cast<std::size_t>(i - pals[i] + 1) + 1];
    }
    for (std::size_t b = 1; b < offsets_.size(); ++b) offsets_[b] += offsets_[b - 1];
    radii_.resize(static_cast<std::size_t>(offsets_.back()));
    std::vector<Index> fill(offsets_.begin(), offsets_.end() - 1);
    for (Index i = 1; i <= n; ++i) {
        if (pals[i] >= 1) radii_[static_cast<std::size_t>(fill[static_cast<std::size_t>(i - pals[i] + 1)]++)] = pals[i];
    }
}

} // namespace sagp
