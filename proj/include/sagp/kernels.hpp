#pragma once

// Data-parallel inner loops with a scalar reference and SIMD variants.
// The variant is chosen once at startup from the CPU's capabilities and can
// be forced with the environment variable SAGP_SIMD=scalar|avx2 or with
// select_isa(). All variants return identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace sagp::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
    // First/last index t in [0, count) with lo < v[t] <= hi; count if none.
    std::size_t (*find_first_in_range)(const std::int32_t* v, std::size_t count, std::int32_t lo,
                                       std::int32_t hi);
    std::size_t (*find_last_in_range)(const std::int32_t* v, std::size_t count, std::int32_t lo,
                                      std::int32_t hi);
    // First/last index t with v[t] < threshold; count if none.
    std::size_t (*find_first_below)(const std::int32_t* v, std::size_t count,
                                    std::int32_t threshold);
    std::size_t (*find_last_below)(const std::int32_t* v, std::size_t count,
                                   std::int32_t threshold);
    // Minimum of v[0, count); INT32_MAX when count == 0.
    std::int32_t (*min_value)(const std::int32_t* v, std::size_t count);
    // Length of the longest common prefix of a[0, count) and b[0, count).
    std::size_t (*common_prefix)(const std::int32_t* a, const std::int32_t* b, std::size_t count);
    // out[x] = values[right[x]] < values[left[x]] ? right[x] : left[x]
    void (*argmin_merge)(const std::int32_t* values, const std::int32_t* left,
                         const std::int32_t* right, std::int32_t* out, std::size_t count);
};

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
std::vector<Isa> supported_isas();

/// Throws std::invalid_argument if the CPU lacks the instruction set.
void select_isa(Isa isa);
Isa active_isa();

const KernelTable& table_for(Isa isa);
const KernelTable& active();

// Span conveniences over the active table.

inline std::size_t find_first_in_range(std::span<const std::int32_t> v, std::int32_t lo,
                                       std::int32_t hi) {
    return active().find_first_in_range(v.data(), v.size(), lo, hi);
}
inline std::size_t find_last_in_range(std::span<const std::int32_t> v, std::int32_t lo,
                                      std::int32_t hi) {
    return active().find_last_in_range(v.data(), v.size(), lo, hi);
}
inline std::size_t find_first_below(std::span<const std::int32_t> v, std::int32_t threshold) {
    return active().find_first_below(v.data(), v.size(), threshold);
}
inline std::size_t find_last_below(std::span<const std::int32_t> v, std::int32_t threshold) {
    return active().find_last_below(v.data(), v.size(), threshold);
}
inline std::int32_t min_value(std::span<const std::int32_t> v) {
    return active().min_value(v.data(), v.size());
}
inline std::size_t common_prefix(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    return active().common_prefix(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

namespace detail {
extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;
#endif
} // namespace detail

} // namespace sagp::kernels
