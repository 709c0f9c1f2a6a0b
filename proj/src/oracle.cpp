#include "sagp/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sagp::oracle {
namespace {

void guard(const Text& text, Index max_n) {
    if (text.size() > max_n) {
        throw std::length_error("oracle input of length " + std::to_string(text.size()) +
                                " exceeds bound " + std::to_string(max_n));
    }
}

// w g u rev(u) rev(w) at pivot i, checked symbol by symbol.
bool is_sagp(const Text& t, Index i, Index w, Index g, Index u) {
    const Index start = i - u - g - w + 1;
    const Index end = i + u + w;
    if (start < 1 || end > t.size()) return false;
    for (Index j = 1; j <= u; ++j) {
        if (t[i - j + 1] != t[i + j]) return false;
    }
    for (Index x = 0; x < w; ++x) {
        if (t[start + x] != t[end - x]) return false;
    }
    return true;
}

} // namespace

std::vector<Index> brute_force_pals(const Text& text, Index max_n) {
    guard(text, max_n);
    const Index n = text.size();
    std::vector<Index> pals(static_cast<std::size_t>(n) + 1, 0);
    for (Index i = 1; i <= n; ++i) {
        Index r = 0;
        while (i - r >= 1 && i + r + 1 <= n && text[i - r] == text[i + r + 1]) ++r;
        pals[static_cast<std::size_t>(i)] = r;
    }
    return pals;
}

std::vector<Index> brute_force_findr(const Text& text, Index max_n) {
    guard(text, max_n);
    const Index n = text.size();
    std::vector<Index> findr(static_cast<std::size_t>(n) + 1, kInfinity);
    for (Index t = 1; t <= n; ++t) {
        for (Index r = t; r <= n && findr[static_cast<std::size_t>(t)] == kInfinity; ++r) {
            for (Index l = 1; l < r; ++l) {
                if (text[l] == text[r]) {
                    findr[static_cast<std::size_t>(t)] = r;
                    break;
                }
            }
        }
    }
    return findr;
}

SagpReport brute_force_sagps(const Text& text, Index max_n) {
    guard(text, max_n);
    const Index n = text.size();
    const auto pals = brute_force_pals(text, max_n);

    SagpReport report;
    report.n = n;
    report.types.assign(static_cast<std::size_t>(n) + 1, PivotType::Type2);

    struct Candidate {
        Index w, g, u;
    };
    std::vector<Candidate> valid;
    for (Index i = 1; i <= n; ++i) {
        valid.clear();
        // u rev(u) must itself be a palindrome, so stop at the first u that is not.
        for (Index u = 1; i - u + 1 >= 1 && i + u <= n && text[i - u + 1] == text[i + u]; ++u) {
            for (Index g = 1; i - u - g >= 1; ++g) {
                // For fixed (i, u, g) the end of w is fixed, so valid w form a prefix-closed range.
                for (Index w = 1; is_sagp(text, i, w, g, u); ++w) valid.push_back({w, g, u});
            }
        }
        if (valid.empty()) continue;

        Index best_arm = 0;
        for (const auto& c : valid) best_arm = std::max(best_arm, c.w + c.u);
        Index best_u = 0;
        for (const auto& c : valid) {
            if (c.w + c.u == best_arm) best_u = std::max(best_u, c.u);
        }
        const bool type1 = std::any_of(valid.begin(), valid.end(), [&](const Candidate& c) {
            return c.u == pals[static_cast<std::size_t>(i)];
        });
        const PivotType kind = type1 ? PivotType::Type1 : PivotType::Type2;
        report.types[static_cast<std::size_t>(i)] = kind;
        for (const auto& c : valid) {
            if (c.w + c.u == best_arm && c.u == best_u) {
                report.sagps.push_back({i, c.w, c.g, c.u, kind});
                (type1 ? report.occ1 : report.occ2) += 1;
            }
        }
    }
    std::sort(report.sagps.begin(), report.sagps.end(), [](const Sagp& a, const Sagp& b) {
        if (a.pivot != b.pivot) return a.pivot < b.pivot;
        if (a.gap_len != b.gap_len) return a.gap_len < b.gap_len;
        if (a.w_len != b.w_len) return a.w_len < b.w_len;
        return a.u_len < b.u_len;
    });
    return report;
}

} // namespace sagp::oracle
