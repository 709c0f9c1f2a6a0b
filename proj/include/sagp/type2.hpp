#pragma once

#include <vector>

#include "sagp/classify.hpp"
#include "sagp/core.hpp"
#include "sagp/palindromes.hpp"

namespace sagp {

/// findr[t] = min{ r >= t : T[l] = T[r] for some l < r }, kInfinity if none.
struct FindRTable {
    std::vector<Index> findr; ///< 1-based

    Index operator[](Index t) const { return findr[static_cast<std::size_t>(t)]; }
};

/// Right-to-left scan keeping the first two upcoming occurrences per symbol
/// (for r whose witness l lies at or after t) and a stack of positions whose
/// leftmost occurrence lies before t. O(n).
FindRTable build_findr(const Text& text, const ClassifyTables& tables);

/// Canonical longest SAGPs for type-2 pivots. Every output has |w| = 1 and
/// u_len = i - r with r = findr[i - pals[i] + 1] < i; gaps run over the
/// occurrences l < r of T[r], longest gap first.
std::vector<Sagp> find_type2(const Text& text, const PalsArray& pals, const ClassifyTables& tables,
                             const FindRTable& findr, const PivotClasses& classes);

} // namespace sagp
