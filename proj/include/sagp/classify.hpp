#pragma once

#include <vector>

#include "sagp/core.hpp"
#include "sagp/palindromes.hpp"

namespace sagp {

/// lmost is indexed by symbol rank (absent ranks hold kInfinity); nextpos is
/// 1-based with kInfinity when no later occurrence exists.
struct ClassifyTables {
    std::vector<Index> lmost;
    std::vector<Index> nextpos;

    Index leftmost(Index rank) const { return lmost[static_cast<std::size_t>(rank)]; }
};

ClassifyTables build_tables(const Text& text);

struct PivotClasses {
    std::vector<PivotType> type; ///< 1-based
    std::vector<Index> pos1;
    std::vector<Index> pos2;

    bool is_type1(Index i) const { return type[static_cast<std::size_t>(i)] == PivotType::Type1; }
};

/// i is type-1 iff pals[i] >= 1, i + pals[i] + 1 <= n and the symbol right
/// after the maximal palindrome occurs before its begin position minus one.
PivotClasses classify_pivots(const Text& text, const PalsArray& pals, const ClassifyTables& tables);

} // namespace sagp
