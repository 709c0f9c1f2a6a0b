#include "sagp/generate.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace sagp {

std::vector<Symbol> random_symbols(std::size_t length, std::uint64_t sigma, std::uint64_t seed) {
    if (sigma == 0) throw std::invalid_argument("sigma must be at least 1");
    SplitMix64 rng(seed);
    std::vector<Symbol> out(length);
    for (auto& s : out) s = rng.next() % sigma;
    return out;
}

Text random_text(std::size_t length, std::uint64_t sigma, std::uint64_t seed) {
    return Text::from_symbols(random_symbols(length, sigma, seed));
}

std::string render_symbols(const std::vector<Symbol>& symbols, std::uint64_t sigma) {
    std::string out;
    if (sigma <= 26) {
        out.reserve(symbols.size());
        for (Symbol s : symbols) out.push_back(static_cast<char>('a' + s));
        return out;
    }
    for (std::size_t x = 0; x < symbols.size(); ++x) {
        if (x) out.push_back(' ');
        out += std::to_string(symbols[x]);
    }
    return out;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string_view> tokens(std::string_view data) {
    std::vector<std::string_view> out;
    std::size_t x = 0;
    while (x < data.size()) {
        while (x < data.size() && is_space(data[x])) ++x;
        std::size_t start = x;
        while (x < data.size() && !is_space(data[x])) ++x;
        if (x > start) out.push_back(data.substr(start, x - start));
    }
    return out;
}

bool all_digits(std::string_view tok) {
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
    }
    return !tok.empty();
}

Text parse_integers(const std::vector<std::string_view>& toks) {
    std::vector<Symbol> symbols;
    symbols.reserve(toks.size());
    for (auto tok : toks) {
        Symbol v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("not a non-negative integer: '" + std::string(tok) + "'");
        }
        symbols.push_back(v);
    }
    return Text::from_symbols(symbols);
}

} // namespace

Text parse_input(std::string_view data, InputFormat format) {
    if (format == InputFormat::Integers) return parse_integers(tokens(data));
    if (format == InputFormat::Auto) {
        auto toks = tokens(data);
        bool numeric = toks.size() >= 2;
        for (auto tok : toks) numeric = numeric && all_digits(tok);
        if (numeric) return parse_integers(toks);
    }
    while (!data.empty() && (data.back() == '\n' || data.back() == '\r')) data.remove_suffix(1);
    return Text::from_bytes(data);
}

} // namespace sagp
