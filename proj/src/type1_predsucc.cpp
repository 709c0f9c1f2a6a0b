#include "sagp/type1.hpp"

#include <algorithm>

namespace sagp {
namespace {

template <PredSuccSet Set>
PredSuccResult run(const Text& text, const SuffixArrayIndex& idx, const RmqTable& rmq,
                   const PalBuckets& buckets, const PivotClasses& classes) {
    const Index n = text.size();
    ActiveSet<Set> active(idx, n);
    PredSuccResult result;

    auto emit = [&](Index i, Index w, Index b, Index radius, Key t) {
        const Index end = op_map(n, idx.sa[static_cast<std::size_t>(t)]);
        result.sagps.push_back({i, w, b - end - 1, radius, PivotType::Type1});
    };

    for (Index b = 1; b <= n; ++b) {
        for (Index radius : buckets.at(b)) {
            const Index i = b + radius - 1;
            if (!classes.is_type1(i)) continue;
            const Index k = idx.isa[static_cast<std::size_t>(i + radius + 1)];
            const Key key = static_cast<Key>(k);
            const auto p = active.predecessor(key);
            const auto q = active.successor(key);
            const Index wd = p ? range_lcp(idx, rmq, static_cast<Index>(*p), k) : 0;
            const Index wu = q ? range_lcp(idx, rmq, static_cast<Index>(*q), k) : 0;
            const Index w = std::max(wd, wu);
            if (w < 1) continue;
            if (p && wd == w) {
                for (auto t = p; t && range_lcp(idx, rmq, static_cast<Index>(*t), k) >= w;
                     t = active.predecessor(*t)) {
                    emit(i, w, b, radius, *t);
                }
            }
            if (q && wu == w) {
                for (auto t = q; t && range_lcp(idx, rmq, static_cast<Index>(*t), k) >= w;
                     t = active.successor(*t)) {
                    emit(i, w, b, radius, *t);
                }
            }
        }
        active.advance();
    }
    sort_canonical(result.sagps);
    result.stats = active.stats();
    return result;
}

} // namespace

PredSuccResult find_type1_predsucc(const Text& text, const SuffixArrayIndex& idx,
                                   const RmqTable& rmq, const PalBuckets& buckets, const PivotClasses& classes,
                                   PredSuccBackend backend) {
    switch (backend) {
    case PredSuccBackend::Baseline:
        return run<OrderedSetBaseline>(text, idx, rmq, buckets, classes);
    case PredSuccBackend::Veb:
        return run<VebTree>(text, idx, rmq, buckets, classes);
    case PredSuccBackend::YFast:
        return run<YFastTrie>(text, idx, rmq, buckets, classes);
    }
    return {};
}

} // namespace sagp
