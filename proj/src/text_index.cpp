#include "sagp/text_index.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sagp/kernels.hpp"

namespace sagp {
namespace {

// Induced sorting (SA-IS). `s` holds n symbols in [0, alphabet) and ends with
// a unique smallest symbol; `sa` receives 0-based suffix starts.
class InducedSorter {
public:
    static void sort(const Index* s, Index* sa, Index n, Index alphabet) {
        if (n == 1) {
            sa[0] = 0;
            return;
        }
        InducedSorter(s, sa, n, alphabet).run();
    }

private:
    InducedSorter(const Index* s, Index* sa, Index n, Index alphabet)
        : s_(s), sa_(sa), n_(n), bucket_(static_cast<std::size_t>(alphabet) + 1),
          stype_(static_cast<std::size_t>(n)) {}

    bool is_lms(Index i) const { return i > 0 && stype_[i] && !stype_[i - 1]; }

    void bucket_bounds(bool ends) {
        std::fill(bucket_.begin(), bucket_.end(), 0);
        for (Index i = 0; i < n_; ++i) ++bucket_[s_[i]];
        Index sum = 0;
        for (auto& b : bucket_) {
            sum += b;
            b = ends ? sum : sum - b;
        }
    }

    void induce() {
        bucket_bounds(false);
        for (Index i = 0; i < n_; ++i) {
            Index j = sa_[i] - 1;
            if (sa_[i] > 0 && !stype_[j]) sa_[bucket_[s_[j]]++] = j;
        }
        bucket_bounds(true);
        for (Index i = n_ - 1; i >= 0; --i) {
            Index j = sa_[i] - 1;
            if (sa_[i] > 0 && stype_[j]) sa_[--bucket_[s_[j]]] = j;
        }
    }

    void run() {
        stype_[n_ - 1] = 1;
        stype_[n_ - 2] = 0;
        for (Index i = n_ - 3; i >= 0; --i) {
            stype_[i] = s_[i] < s_[i + 1] || (s_[i] == s_[i + 1] && stype_[i + 1]);
        }

        // Sort LMS substrings.
        bucket_bounds(true);
        std::fill(sa_, sa_ + n_, -1);
        for (Index i = 1; i < n_; ++i) {
            if (is_lms(i)) sa_[--bucket_[s_[i]]] = i;
        }
        induce();

        Index lms_count = 0;
        for (Index i = 0; i < n_; ++i) {
            if (is_lms(sa_[i])) sa_[lms_count++] = sa_[i];
        }
        std::fill(sa_ + lms_count, sa_ + n_, -1);

        // Name LMS substrings; names land at sa_[lms_count + pos / 2].
        Index names = 0;
        Index prev = -1;
        for (Index i = 0; i < lms_count; ++i) {
            Index pos = sa_[i];
            bool differs = false;
            for (Index d = 0; d < n_; ++d) {
                if (prev == -1 || s_[pos + d] != s_[prev + d] || stype_[pos + d] != stype_[prev + d]) {
                    differs = true;
                    break;
                }
                if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
            }
            if (differs) {
                ++names;
                prev = pos;
            }
            sa_[lms_count + pos / 2] = names - 1;
        }
        for (Index i = n_ - 1, j = n_ - 1; i >= lms_count; --i) {
            if (sa_[i] >= 0) sa_[j--] = sa_[i];
        }

        // Sort the reduced string.
        Index* reduced = sa_ + n_ - lms_count;
        if (names < lms_count) {
            sort(reduced, sa_, lms_count, names);
        } else {
            for (Index i = 0; i < lms_count; ++i) sa_[reduced[i]] = i;
        }

        // Induce the full order from the sorted LMS suffixes.
        for (Index i = 1, j = 0; i < n_; ++i) {
            if (is_lms(i)) reduced[j++] = i;
        }
        for (Index i = 0; i < lms_count; ++i) sa_[i] = reduced[sa_[i]];
        std::fill(sa_ + lms_count, sa_ + n_, -1);
        bucket_bounds(true);
        for (Index i = lms_count - 1; i >= 0; --i) {
            Index j = sa_[i];
            sa_[i] = -1;
            sa_[--bucket_[s_[j]]] = j;
        }
        induce();
    }

    const Index* s_;
    Index* sa_;
    Index n_;
    std::vector<Index> bucket_;
    std::vector<std::uint8_t> stype_;
};

} // namespace

SuffixArrayIndex build_index(std::span<const Index> seq) {
    if (seq.empty()) throw std::invalid_argument("build_index: empty sequence");
    const Index m = static_cast<Index>(seq.size());
    const Index last = seq.back();
    Index max_symbol = last;
    for (Index t = 0; t + 1 < m; ++t) {
        if (seq[t] <= last) {
            throw std::invalid_argument("build_index: terminal symbol must be unique and smallest");
        }
        max_symbol = std::max(max_symbol, seq[t]);
    }
    if (last < 0) throw std::invalid_argument("build_index: negative symbol");

    SuffixArrayIndex idx;
    idx.subject.resize(static_cast<std::size_t>(m) + 1);
    std::copy(seq.begin(), seq.end(), idx.subject.begin() + 1);

    std::vector<Index> sa0(static_cast<std::size_t>(m));
    InducedSorter::sort(seq.data(), sa0.data(), m, max_symbol + 1);

    idx.sa.resize(static_cast<std::size_t>(m) + 1);
    idx.isa.resize(static_cast<std::size_t>(m) + 1);
    for (Index r = 1; r <= m; ++r) {
        idx.sa[r] = sa0[r - 1] + 1;
        idx.isa[idx.sa[r]] = r;
    }

    // Kasai et al.: walk positions in text order, reusing h - 1.
    idx.lcp.assign(static_cast<std::size_t>(m) + 1, 0);
    idx.lcp[1] = -1;
    const Index* text = idx.subject.data();
    Index h = 0;
    for (Index pos = 1; pos <= m; ++pos) {
        Index r = idx.isa[pos];
        if (r == 1) {
            h = 0;
            continue;
        }
        Index other = idx.sa[r - 1];
        Index limit = std::min(m - pos + 1, m - other + 1) - h;
        h += static_cast<Index>(kernels::common_prefix({text + pos + h, static_cast<std::size_t>(limit)},
                                                       {text + other + h, static_cast<std::size_t>(limit)}));
        idx.lcp[r] = h;
        if (h > 0) --h;
    }
    return idx;
}

RmqTable::RmqTable(std::span<const Index> values) : values_(values.begin(), values.end()) {
    const auto size = values_.size();
    if (size < 2) return;
    std::vector<Index> identity(size);
    std::iota(identity.begin(), identity.end(), 0);
    const std::vector<Index>* prev = &identity;
    for (std::size_t width = 2; width <= size; width *= 2) {
        std::vector<Index> level(size - width + 1);
        kernels::active().argmin_merge(values_.data(), prev->data(), prev->data() + width / 2,
                                       level.data(), level.size());
        levels_.push_back(std::move(level));
        prev = &levels_.back();
    }
}

Index RmqTable::argmin(Index i, Index j) const {
    if (i > j) std::swap(i, j);
    const auto len = static_cast<unsigned>(j - i + 1);
    const int k = std::bit_width(len) - 1;
    if (k == 0) return i;
    const auto& level = levels_[static_cast<std::size_t>(k - 1)];
    Index a = level[static_cast<std::size_t>(i)];
    Index b = level[static_cast<std::size_t>(j - (1 << k) + 1)];
    return values_[static_cast<std::size_t>(b)] < values_[static_cast<std::size_t>(a)] ? b : a;
}

Index range_lcp(const SuffixArrayIndex& idx, const RmqTable& rmq, Index a, Index b) {
    const Index m = idx.size();
    if (a < 1 || a > m || b < 1 || b > m) {
        throw std::out_of_range("range_lcp: rank out of range");
    }
    if (a == b) return idx.suffix_length(a);
    if (a > b) std::swap(a, b);
    return rmq.min(a + 1, b);
}

Index op_map(Index n, Index j) {
    if (j < n + 2 || j > 2 * n + 1) {
        throw std::out_of_range("op_map: position " + std::to_string(j) +
                                " is outside the reversed segment");
    }
    return 2 * n - j + 2;
}

PlvNlv build_plv_nlv(const SuffixArrayIndex& idx) {
    const Index m = idx.size();
    PlvNlv out;
    out.plv.assign(static_cast<std::size_t>(m) + 1, 0);
    out.nlv.assign(static_cast<std::size_t>(m) + 1, m + 1);
    std::vector<Index> stack;
    stack.reserve(static_cast<std::size_t>(m));
    for (Index j = 1; j <= m; ++j) {
        while (!stack.empty() && idx.sa[stack.back()] < idx.sa[j]) {
            out.nlv[stack.back()] = j;
            stack.pop_back();
        }
        out.plv[j] = stack.empty() ? 0 : stack.back();
        stack.push_back(j);
    }
    return out;
}

} // namespace sagp
