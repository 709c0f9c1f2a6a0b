#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sagp/core.hpp"
#include "sagp/generate.hpp"
#include "sagp/kernels.hpp"

namespace sagp::test {

inline Text text_of(std::string_view s) { return Text::from_bytes(s); }

/// Every string of length n over the first sigma letters, in lexicographic order.
inline std::vector<std::string> all_strings(int n, int sigma) {
    std::vector<std::string> out;
    std::string cur(static_cast<std::size_t>(n), 'a');
    while (true) {
        out.push_back(cur);
        int x = n - 1;
        while (x >= 0 && cur[static_cast<std::size_t>(x)] == 'a' + sigma - 1) {
            cur[static_cast<std::size_t>(x)] = 'a';
            --x;
        }
        if (x < 0) break;
        ++cur[static_cast<std::size_t>(x)];
    }
    return out;
}

/// a^n, (ab)^(n/2), (abc)^(n/3) for n in [1, max_n].
inline std::vector<std::string> structured_family(int max_n) {
    std::vector<std::string> out;
    for (int n = 1; n <= max_n; ++n) {
        std::string a, ab, abc;
        for (int x = 0; x < n; ++x) {
            a.push_back('a');
            ab.push_back(static_cast<char>('a' + x % 2));
            abc.push_back(static_cast<char>('a' + x % 3));
        }
        out.push_back(a);
        out.push_back(ab);
        out.push_back(abc);
    }
    return out;
}

/// Seeded random strings, lengths in [1, max_n], sigma cycling over {1,2,3,4,8}.
inline std::vector<Text> fuzz_corpus(int count, int max_n, std::uint64_t seed) {
    static constexpr std::uint64_t kSigmas[] = {1, 2, 3, 4, 8};
    SplitMix64 rng(seed);
    std::vector<Text> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int x = 0; x < count; ++x) {
        const auto n = 1 + rng.next() % static_cast<std::uint64_t>(max_n);
        const auto sigma = kSigmas[static_cast<std::size_t>(x) % 5];
        out.push_back(random_text(n, sigma, rng.next()));
    }
    return out;
}

/// Runs f once per instruction set the CPU supports, restoring the default.
template <class F>
void for_each_isa(F&& f) {
    const auto saved = kernels::active_isa();
    for (auto isa : kernels::supported_isas()) {
        kernels::select_isa(isa);
        f(isa);
    }
    kernels::select_isa(saved);
}

} // namespace sagp::test
