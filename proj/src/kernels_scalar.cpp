#include "sagp/kernels.hpp"

#include <limits>

namespace sagp::kernels::detail {
namespace {

std::size_t find_first_in_range(const std::int32_t* v, std::size_t count, std::int32_t lo,
                                std::int32_t hi) {
    for (std::size_t t = 0; t < count; ++t) {
        if (v[t] > lo && v[t] <= hi) return t;
    }
    return count;
}

std::size_t find_last_in_range(const std::int32_t* v, std::size_t count, std::int32_t lo,
                               std::int32_t hi) {
    for (std::size_t t = count; t-- > 0;) {
        if (v[t] > lo && v[t] <= hi) return t;
    }
    return count;
}

std::size_t find_first_below(const std::int32_t* v, std::size_t count, std::int32_t threshold) {
    for (std::size_t t = 0; t < count; ++t) {
        if (v[t] < threshold) return t;
    }
    return count;
}

std::size_t find_last_below(const std::int32_t* v, std::size_t count, std::int32_t threshold) {
    for (std::size_t t = count; t-- > 0;) {
        if (v[t] < threshold) return t;
    }
    return count;
}

std::int32_t min_value(const std::int32_t* v, std::size_t count) {
    std::int32_t m = std::numeric_limits<std::int32_t>::max();
    for (std::size_t t = 0; t < count; ++t) m = v[t] < m ? v[t] : m;
    return m;
}

std::size_t common_prefix(const std::int32_t* a, const std::int32_t* b, std::size_t count) {
    std::size_t l = 0;
    while (l < count && a[l] == b[l]) ++l;
    return l;
}

void argmin_merge(const std::int32_t* values, const std::int32_t* left, const std::int32_t* right,
                  std::int32_t* out, std::size_t count) {
    for (std::size_t x = 0; x < count; ++x) {
        out[x] = values[right[x]] < values[left[x]] ? right[x] : left[x];
    }
}

} // namespace

const KernelTable scalar_table{
    find_first_in_range, find_last_in_range, find_first_below, find_last_below,
    min_value,           common_prefix,      argmin_merge,
};

} // namespace sagp::kernels::detail
