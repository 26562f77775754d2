// Compiled with -mavx2 on x86-64; only reached after a runtime CPU check.
#include <algorithm>
#include <bit>
#include <cassert>
#include <vector>

#include "mixdom/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace mixdom::kernels::avx2 {

namespace {

template <typename Op>
void combine(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, Op op) {
    assert(dst.size() == src.size());
    std::size_t i = 0;
    for (; i + 4 <= dst.size(); i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
        const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
        _mm256_storeu_si256(d, op(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
    }
    for (; i < dst.size(); ++i) {
        const __m256i r = op(_mm256_set1_epi64x(static_cast<long long>(dst[i])),
                             _mm256_set1_epi64x(static_cast<long long>(src[i])));
        dst[i] = static_cast<std::uint64_t>(_mm256_extract_epi64(r, 0));
    }
}

// Nibble lookup popcount, summed per 64-bit lane with SAD.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes =
        _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

}  // namespace

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    combine(dst, src, [](__m256i a, __m256i b) { return _mm256_or_si256(a, b); });
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    combine(dst, src, [](__m256i a, __m256i b) { return _mm256_and_si256(a, b); });
}

void andnot_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    // _mm256_andnot_si256(x, y) computes ~x & y
    combine(dst, src, [](__m256i a, __m256i b) { return _mm256_andnot_si256(b, a); });
}

std::size_t popcount_words(std::span<const std::uint64_t> words) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= words.size(); i += 4) {
        const auto v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i));
        acc = _mm256_add_epi64(acc, popcount_lanes(v));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < words.size(); ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
    return total;
}

void coverage_counts(CoverageShape shape, std::span<const std::uint8_t> membership,
                     std::span<std::uint8_t> counts) {
    const std::size_t n = shape.n;
    assert(membership.size() == 5 * n && counts.size() == 5 * n);

    // Each family is copied with `pad` wrapped bytes on both sides so that
    // every stencil shift becomes a plain unaligned load.
    const std::size_t pad = std::max<std::size_t>(shape.k, 1);
    const std::size_t stride = n + 2 * pad;
    std::vector<std::uint8_t> ext(5 * stride);
    for (std::size_t g = 0; g < 5; ++g) {
        const std::uint8_t* src = membership.data() + g * n;
        std::uint8_t* row = ext.data() + g * stride;
        for (std::size_t j = 0; j < stride; ++j) row[j] = src[(j + n - pad) % n];
    }

    for (std::uint32_t family = 0; family < 5; ++family) {
        const auto stencil = coverage_stencil(family, shape.k);
        std::uint8_t* out = counts.data() + family * n;
        std::size_t i = 0;
        for (; i + 32 <= n; i += 32) {
            __m256i acc = _mm256_setzero_si256();
            for (const StencilTerm& t : stencil) {
                const std::uint8_t* p = ext.data() + t.family * stride + pad + i;
                acc = _mm256_add_epi8(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + t.shift)));
            }
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
        }
        for (; i < n; ++i) {
            std::uint8_t c = 0;
            for (const StencilTerm& t : stencil)
                c = static_cast<std::uint8_t>(c + ext[t.family * stride + pad + i + t.shift]);
            out[i] = c;
        }
    }
}

}  // namespace mixdom::kernels::avx2

#else

#include <stdexcept>

namespace mixdom::kernels::avx2 {

namespace {
[[noreturn]] void unavailable() { throw std::logic_error("AVX2 kernels not compiled in"); }
}  // namespace

void or_words(std::span<std::uint64_t>, std::span<const std::uint64_t>) { unavailable(); }
void and_words(std::span<std::uint64_t>, std::span<const std::uint64_t>) { unavailable(); }
void andnot_words(std::span<std::uint64_t>, std::span<const std::uint64_t>) { unavailable(); }
std::size_t popcount_words(std::span<const std::uint64_t>) { unavailable(); }
void coverage_counts(CoverageShape, std::span<const std::uint8_t>, std::span<std::uint8_t>) {
    unavailable();
}

}  // namespace mixdom::kernels::avx2

#endif
