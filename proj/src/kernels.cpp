#include "sagp/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sagp::kernels {
namespace {

Isa detect_default() {
    if (const char* forced = std::getenv("SAGP_SIMD")) {
        std::string_view name(forced);
        if (name == "scalar") return Isa::Scalar;
        if (name == "avx2" && isa_supported(Isa::Avx2)) return Isa::Avx2;
    }
    return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect_default()};
    return isa;
}

} // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi");
#else
        return false;
#endif
    }
    return false;
}

std::vector<Isa> supported_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
        if (isa_supported(isa)) out.push_back(isa);
    }
    return out;
}

void select_isa(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::invalid_argument("instruction set not supported: " + std::string(isa_name(isa)));
    }
    current().store(isa, std::memory_order_relaxed);
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

const KernelTable& table_for(Isa isa) {
#if defined(__x86_64__) || defined(_M_X64)
    if (isa == Isa::Avx2) return detail::avx2_table;
#endif
    (void)isa;
    return detail::scalar_table;
}

const KernelTable& active() { return table_for(active_isa()); }

} // namespace sagp::kernels
