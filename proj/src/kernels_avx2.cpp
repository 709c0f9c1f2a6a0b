#include "sagp/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <limits>

// Functions carry a per-function target attribute instead of compiling the
// whole file with -mavx2, so no AVX2 code leaks into shared inline symbols.
#define SAGP_AVX2 __attribute__((target("avx2,bmi")))

namespace sagp::kernels::detail {
namespace {

SAGP_AVX2 inline unsigned lane_mask(__m256i m) {
    return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(m)));
}

SAGP_AVX2 inline __m256i in_range(__m256i x, __m256i lo, __m256i hi) {
    return _mm256_andnot_si256(_mm256_cmpgt_epi32(x, hi), _mm256_cmpgt_epi32(x, lo));
}

SAGP_AVX2 std::size_t find_first_in_range(const std::int32_t* v, std::size_t count,
                                          std::int32_t lo, std::int32_t hi) {
    const __m256i vlo = _mm256_set1_epi32(lo);
    const __m256i vhi = _mm256_set1_epi32(hi);
    std::size_t t = 0;
    for (; t + 8 <= count; t += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + t));
        if (unsigned m = lane_mask(in_range(x, vlo, vhi))) return t + _tzcnt_u32(m);
    }
    for (; t < count; ++t) {
        if (v[t] > lo && v[t] <= hi) return t;
    }
    return count;
}

SAGP_AVX2 std::size_t find_last_in_range(const std::int32_t* v, std::size_t count,
                                         std::int32_t lo, std::int32_t hi) {
    const __m256i vlo = _mm256_set1_epi32(lo);
    const __m256i vhi = _mm256_set1_epi32(hi);
    std::size_t t = count;
    for (; t >= 8; t -= 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + t - 8));
        if (unsigned m = lane_mask(in_range(x, vlo, vhi))) return t - 8 + (31 - __builtin_clz(m));
    }
    while (t-- > 0) {
        if (v[t] > lo && v[t] <= hi) return t;
    }
    return count;
}

SAGP_AVX2 std::size_t find_first_below(const std::int32_t* v, std::size_t count,
                                       std::int32_t threshold) {
    const __m256i vt = _mm256_set1_epi32(threshold);
    std::size_t t = 0;
    for (; t + 8 <= count; t += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + t));
        if (unsigned m = lane_mask(_mm256_cmpgt_epi32(vt, x))) return t + _tzcnt_u32(m);
    }
    for (; t < count; ++t) {
        if (v[t] < threshold) return t;
    }
    return count;
}

SAGP_AVX2 std::size_t find_last_below(const std::int32_t* v, std::size_t count,
                                      std::int32_t threshold) {
    const __m256i vt = _mm256_set1_epi32(threshold);
    std::size_t t = count;
    for (; t >= 8; t -= 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + t - 8));
        if (unsigned m = lane_mask(_mm256_cmpgt_epi32(vt, x))) return t - 8 + (31 - __builtin_clz(m));
    }
    while (t-- > 0) {
        if (v[t] < threshold) return t;
    }
    return count;
}

SAGP_AVX2 std::int32_t min_value(const std::int32_t* v, std::size_t count) {
    std::int32_t m = std::numeric_limits<std::int32_t>::max();
    std::size_t t = 0;
    if (count >= 8) {
        __m256i acc = _mm256_set1_epi32(m);
        for (; t + 8 <= count; t += 8) {
            acc = _mm256_min_epi32(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + t)));
        }
        __m128i half = _mm_min_epi32(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
        half = _mm_min_epi32(half, _mm_shuffle_epi32(half, _MM_SHUFFLE(1, 0, 3, 2)));
        half = _mm_min_epi32(half, _mm_shuffle_epi32(half, _MM_SHUFFLE(2, 3, 0, 1)));
        m = _mm_cvtsi128_si32(half);
    }
    for (; t < count; ++t) m = v[t] < m ? v[t] : m;
    return m;
}

SAGP_AVX2 std::size_t common_prefix(const std::int32_t* a, const std::int32_t* b,
                                    std::size_t count) {
    std::size_t l = 0;
    for (; l + 8 <= count; l += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + l));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + l));
        unsigned eq = lane_mask(_mm256_cmpeq_epi32(x, y));
        if (eq != 0xFFu) return l + _tzcnt_u32(~eq);
    }
    while (l < count && a[l] == b[l]) ++l;
    return l;
}

SAGP_AVX2 void argmin_merge(const std::int32_t* values, const std::int32_t* left,
                            const std::int32_t* right, std::int32_t* out, std::size_t count) {
    std::size_t x = 0;
    for (; x + 8 <= count; x += 8) {
        __m256i li = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(left + x));
        __m256i ri = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(right + x));
        __m256i lv = _mm256_i32gather_epi32(values, li, 4);
        __m256i rv = _mm256_i32gather_epi32(values, ri, 4);
        __m256i take_right = _mm256_cmpgt_epi32(lv, rv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x),
                            _mm256_blendv_epi8(li, ri, take_right));
    }
    for (; x < count; ++x) {
        out[x] = values[right[x]] < values[left[x]] ? right[x] : left[x];
    }
}

} // namespace

const KernelTable avx2_table{
    find_first_in_range, find_last_in_range, find_first_below, find_last_below,
    min_value,           common_prefix,      argmin_merge,
};

} // namespace sagp::kernels::detail

#endif
