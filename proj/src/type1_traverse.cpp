#include "sagp/type1.hpp"

#include <algorithm>
#include <span>

#include "sagp/kernels.hpp"

namespace sagp {

TraverseResult find_type1_traverse(const Text& text, const SuffixArrayIndex& idx,
                                   const PalsArray& pals, const PivotClasses& classes) {
    const Index n = text.size();
    const Index m = idx.size();
    const auto& sa = idx.sa;
    const auto& lcp = idx.lcp;
    const std::int32_t* sa_data = sa.data();
    const std::int32_t* lcp_data = lcp.data();
    const kernels::KernelTable& k_ops = kernels::active();

    TraverseResult result;
    auto& stats = result.stats;
    const Index hi = 2 * n + 1;

    for (Index i : classes.pos1) {
        const Index radius = pals[i];
        const Index b = i - radius + 1;
        const Index lo = 2 * n + 3 - b;
        const Index k = idx.isa[static_cast<std::size_t>(i + radius + 1)];
        ++stats.pivots_processed;

        // nearest active entries below and above k
        Index p = 0;
        if (k > 1) {
            std::size_t off = k_ops.find_last_in_range(sa_data + 1, static_cast<std::size_t>(k - 1), lo, hi);
            if (off != static_cast<std::size_t>(k - 1)) p = static_cast<Index>(off) + 1;
        }
        Index q = 0;
        if (k < m) {
            std::size_t len = static_cast<std::size_t>(m - k);
            std::size_t off = k_ops.find_first_in_range(sa_data + k + 1, len, lo, hi);
            if (off != len) q = k + 1 + static_cast<Index>(off);
        }

        const Index wd = p ? k_ops.min_value(lcp_data + p + 1, static_cast<std::size_t>(k - p)) : 0;
        const Index wu = q ? k_ops.min_value(lcp_data + k + 1, static_cast<std::size_t>(q - k)) : 0;
        const Index w = std::max(wd, wu);
        Index lowest = p ? p : 1;
        Index highest = q ? q : m;

        if (w >= 1) {
            if (p && wd == w) {
                // lcp[1] = -1, so some t <= p always qualifies
                const Index s = static_cast<Index>(k_ops.find_last_below(lcp_data + 1, static_cast<std::size_t>(p), w)) + 1;
                for (Index t = p; t >= s; --t) {
                    if (sa[t] > lo && sa[t] <= hi) {
                        result.sagps.push_back({i, w, b - op_map(n, sa[t]) - 1, radius, PivotType::Type1});
                    }
                }
                lowest = s;
            }
            if (q && wu == w) {
                std::size_t len = static_cast<std::size_t>(m - q);
                const Index e = q + 1 + static_cast<Index>(k_ops.find_first_below(lcp_data + q + 1, len, w));
                for (Index t = q; t < e; ++t) {
                    if (sa[t] > lo && sa[t] <= hi) {
                        result.sagps.push_back({i, w, b - op_map(n, sa[t]) - 1, radius, PivotType::Type1});
                    }
                }
                highest = std::min(e, m);
            }
        }
        stats.entries_scanned += static_cast<std::size_t>((k - lowest) + (highest - k));
    }
    sort_canonical(result.sagps);
    stats.outputs = result.sagps.size();
    return result;
}

} // namespace sagp
