#include "sagp/type1.hpp"

namespace sagp {

std::vector<Sagp> find_type1_naive(const Text& text, const SuffixArrayIndex& idx,
                                   const RmqTable& rmq, const PalsArray& pals,
                                   const PivotClasses& classes) {
    const Index n = text.size();
    std::vector<Sagp> out;
    std::vector<Index> best_gaps;
    for (Index i : classes.pos1) {
        const Index radius = pals[i];
        const Index k = idx.isa[static_cast<std::size_t>(i + radius + 1)];
        Index best = 0;
        best_gaps.clear();
        for (Index gap = 1; gap <= i - radius - 1; ++gap) {
            // w ends at e = i - radius - gap; rev(T[1..e]) starts at 2n - e + 2 in T'.
            const Index e = i - radius - gap;
            const Index w = range_lcp(idx, rmq, idx.isa[static_cast<std::size_t>(2 * n - e + 2)], k);
            if (w > best) {
                best = w;
                best_gaps.clear();
            }
            if (w == best && w >= 1) best_gaps.push_back(gap);
        }
        for (Index gap : best_gaps) out.push_back({i, best, gap, radius, PivotType::Type1});
    }
    sort_canonical(out);
    return out;
}

} // namespace sagp
