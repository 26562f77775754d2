#include <cstdlib>
#include <string_view>

#include "mixdom/kernels.hpp"

namespace mixdom::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool avx2_compiled() {
#if defined(MIXDOM_HAVE_AVX2)
    return true;
#else
    return false;
#endif
}

Isa select_isa() {
    if (const char* forced = std::getenv("MIXDOM_ISA"); forced && std::string_view(forced) == "scalar")
        return Isa::Scalar;
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

struct Table {
    void (*or_words)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
    void (*and_words)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
    void (*andnot_words)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
    std::size_t (*popcount_words)(std::span<const std::uint64_t>);
    void (*coverage_counts)(CoverageShape, std::span<const std::uint8_t>, std::span<std::uint8_t>);
};

const Table& table() {
    static const Table t = [] {
        if (active_isa() == Isa::Avx2)
            return Table{avx2::or_words, avx2::and_words, avx2::andnot_words, avx2::popcount_words,
                         avx2::coverage_counts};
        return Table{scalar::or_words, scalar::and_words, scalar::andnot_words,
                     scalar::popcount_words, scalar::coverage_counts};
    }();
    return t;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return avx2_compiled() && cpu_has_avx2();
    }
    return false;
}

Isa active_isa() {
    static const Isa isa = select_isa();
    return isa;
}

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    table().or_words(dst, src);
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    table().and_words(dst, src);
}

void andnot_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    table().andnot_words(dst, src);
}

std::size_t popcount_words(std::span<const std::uint64_t> words) { return table().popcount_words(words); }

void coverage_counts(CoverageShape shape, std::span<const std::uint8_t> membership,
                     std::span<std::uint8_t> counts) {
    table().coverage_counts(shape, membership, counts);
}

}  // namespace mixdom::kernels
