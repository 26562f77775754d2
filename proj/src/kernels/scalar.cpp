#include <bit>
#include <cassert>

#include "mixdom/kernels.hpp"

namespace mixdom::kernels::scalar {

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    assert(dst.size() == src.size());
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    assert(dst.size() == src.size());
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    assert(dst.size() == src.size());
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= ~src[i];
}

std::size_t popcount_words(std::span<const std::uint64_t> words) {
    std::size_t total = 0;
    for (std::uint64_t w : words) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

void coverage_counts(CoverageShape shape, std::span<const std::uint8_t> membership,
                     std::span<std::uint8_t> counts) {
    const std::size_t n = shape.n;
    assert(membership.size() == 5 * n && counts.size() == 5 * n);
    const auto sn = static_cast<std::int64_t>(n);
    for (std::uint32_t family = 0; family < 5; ++family) {
        const auto stencil = coverage_stencil(family, shape.k);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint8_t c = 0;
            for (const StencilTerm& t : stencil) {
                const std::int64_t j = ((static_cast<std::int64_t>(i) + t.shift) % sn + sn) % sn;
                c = static_cast<std::uint8_t>(c + membership[t.family * n + static_cast<std::size_t>(j)]);
            }
            counts[family * n + i] = c;
        }
    }
}

}  // namespace mixdom::kernels::scalar
