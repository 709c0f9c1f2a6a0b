#pragma once

#include <span>
#include <vector>

#include "sagp/core.hpp"

namespace sagp {

/// pals[i] = radius of the maximal even palindrome T[i-r+1 .. i+r] with
/// left-center i (1-based; pals[n] = 0).
struct PalsArray {
    std::vector<Index> pals;

    Index size() const { return static_cast<Index>(pals.size()) - 1; }
    Index operator[](Index i) const { return pals[static_cast<std::size_t>(i)]; }
};

/// Manacher's linear-time scan, even centers only.
PalsArray compute_pals(const Text& text);

/// Radii of maximal even palindromes grouped by begin position b = i - r + 1,
/// stored compactly (offsets into one radius array). Radii ascend per bucket.
class PalBuckets {
public:
    PalBuckets() = default;
    explicit PalBuckets(const PalsArray& pals);

    Index size() const { return static_cast<Index>(offsets_.size()) - 2; }
    std::span<const Index> at(Index b) const {
        auto lo = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(b)]);
        auto hi = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(b) + 1]);
        return std::span<const Index>(radii_).subspan(lo, hi - lo);
    }
    std::size_t total() const { return radii_.size(); }

private:
    std::vector<Index> offsets_{0, 0};
    std::vector<Index> radii_;
};

inline PalBuckets compute_buckets(const PalsArray& pals) { return PalBuckets(pals); }

} // namespace sagp
