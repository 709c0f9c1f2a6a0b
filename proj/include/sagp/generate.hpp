#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sagp/core.hpp"

namespace sagp {

/// splitmix64 (Steele, Lea, Flood 2014).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Symbols in [0, sigma), one modulo-reduced draw each. Throws
/// std::invalid_argument when sigma == 0.
std::vector<Symbol> random_symbols(std::size_t length, std::uint64_t sigma, std::uint64_t seed);

Text random_text(std::size_t length, std::uint64_t sigma, std::uint64_t seed);

/// Letters a, b, ... when sigma <= 26, else space-separated integers.
std::string render_symbols(const std::vector<Symbol>& symbols, std::uint64_t sigma);

enum class InputFormat { Auto, Bytes, Integers };

/// Bytes drop trailing CR/LF. Integers are whitespace-separated decimal
/// tokens. Auto picks Integers when there are at least two whitespace
/// separated tokens and all of them are decimal numbers.
/// Throws std::invalid_argument on malformed integer input.
Text parse_input(std::string_view data, InputFormat format = InputFormat::Auto);

} // namespace sagp
