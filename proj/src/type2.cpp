#include "sagp/type2.hpp"

#include <algorithm>

namespace sagp {

FindRTable build_findr(const Text& text, const ClassifyTables& tables) {
    const Index n = text.size();
    FindRTable out;
    out.findr.assign(static_cast<std::size_t>(n) + 1, kInfinity);

    std::vector<Index> occ1(tables.lmost.size(), kInfinity);
    std::vector<Index> occ2(tables.lmost.size(), kInfinity);
    std::vector<Index> stack;
    Index min_in = kInfinity;
    for (Index i = n; i >= 1; --i) {
        const auto c = static_cast<std::size_t>(text[i]);
        occ2[c] = occ1[c];
        occ1[c] = i;
        min_in = std::min(min_in, occ2[c]);
        stack.push_back(i);
        while (!stack.empty() && tables.leftmost(text[stack.back()]) >= i) stack.pop_back();
        const Index min_out = stack.empty() ? kInfinity : stack.back();
        out.findr[static_cast<std::size_t>(i)] = std::min(min_in, min_out);
    }
    return out;
}

std::vector<Sagp> find_type2(const Text& text, const PalsArray& pals, const ClassifyTables& tables,
                             const FindRTable& findr, const PivotClasses& classes) {
    std::vector<Sagp> out;
    for (Index i : classes.pos2) {
        const Index radius = pals[i];
        if (radius < 1) continue;
        const Index r = findr[i - radius + 1];
        if (r >= i) continue;
        const Index u_len = i - r;
        for (Index l = tables.leftmost(text[r]); l < r; l = tables.nextpos[static_cast<std::size_t>(l)]) {
            out.push_back({i, 1, r - l, u_len, PivotType::Type2});
        }
    }
    return out;
}

} // namespace sagp
