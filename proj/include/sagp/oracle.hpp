#pragma once

// Definitional reference implementations. They share nothing with the fast
// paths beyond Text and the result types, and serve as ground truth for tests
// and for `sagp verify`.

#include <vector>

#include "sagp/core.hpp"

namespace sagp::oracle {

inline constexpr Index kDefaultMaxN = 2000;

/// Enumerates every valid quadruple per pivot and keeps the canonical
/// longest ones. Throws std::length_error when n > max_n.
SagpReport brute_force_sagps(const Text& text, Index max_n = kDefaultMaxN);

/// Expand-around-every-center radii, 1-based.
std::vector<Index> brute_force_pals(const Text& text, Index max_n = kDefaultMaxN);

/// Double-loop evaluation of findr, 1-based; kInfinity when undefined.
std::vector<Index> brute_force_findr(const Text& text, Index max_n = kDefaultMaxN);

} // namespace sagp::oracle
