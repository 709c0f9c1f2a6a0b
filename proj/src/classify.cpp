#include "sagp/classify.hpp"

namespace sagp {

ClassifyTables build_tables(const Text& text) {
    const Index n = text.size();
    ClassifyTables t;
    t.lmost.assign(static_cast<std::size_t>(text.sigma() + kFirstTextRank), kInfinity);
    t.nextpos.assign(static_cast<std::size_t>(n) + 1, kInfinity);
    for (Index i = n; i >= 1; --i) {
        auto& slot = t.lmost[static_cast<std::size_t>(text[i])];
        t.nextpos[static_cast<std::size_t>(i)] = slot;
        slot = i;
    }
    return t;
}

PivotClasses classify_pivots(const Text& text, const PalsArray& pals, const ClassifyTables& tables) {
    const Index n = text.size();
    PivotClasses out;
    out.type.assign(static_cast<std::size_t>(n) + 1, PivotType::Type2);
    for (Index i = 1; i <= n; ++i) {
        const Index r = pals[i];
        const bool type1 = r >= 1 && i + r + 1 <= n && tables.leftmost(text[i + r + 1]) < i - r;
        if (type1) {
            out.type[static_cast<std::size_t>(i)] = PivotType::Type1;
            out.pos1.push_back(i);
        } else {
            out.pos2.push_back(i);
        }
    }
    return out;
}

} // namespace sagp
