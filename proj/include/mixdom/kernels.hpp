#pragma once

// Data-parallel kernels behind ElementSet and domination checking.
//
// Every kernel has a portable scalar reference in `scalar::` and, on x86-64,
// an AVX2 variant in `avx2::`. The unqualified entry points dispatch at
// runtime to the widest variant the CPU supports. Setting the environment
// variable MIXDOM_ISA=scalar before the first call pins the scalar path.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace mixdom::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

// True when the variant was compiled in and the CPU can run it.
bool isa_available(Isa isa);

// The variant the dispatching entry points use.
Isa active_isa();

// Shape of the coverage stencil of P(n,k). Each of the five element families
// is stored as a contiguous run of n bytes in family order (canonical id
// order), and every closed mixed neighborhood is a fixed set of seven
// (family, index shift) pairs; see coverage_stencil().
struct CoverageShape {
    std::uint32_t n;
    std::uint32_t k;
};

struct StencilTerm {
    std::uint8_t family;
    std::int32_t shift;  // in {-k, -1, 0, 1, k}
};

// The seven stencil terms of `family`, i.e. N_m[(family, i)] is
// {(t.family, i + t.shift mod n) : t in result}.
std::array<StencilTerm, 7> coverage_stencil(std::uint32_t family, std::uint32_t k);

namespace scalar {
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void andnot_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
std::size_t popcount_words(std::span<const std::uint64_t> words);
// counts[id] = number of members of N_m[id] that are marked in `membership`.
// Both spans hold 5n bytes; membership bytes must be 0 or 1.
void coverage_counts(CoverageShape shape, std::span<const std::uint8_t> membership,
                     std::span<std::uint8_t> counts);
}  // namespace scalar

namespace avx2 {
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void andnot_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
std::size_t popcount_words(std::span<const std::uint64_t> words);
void coverage_counts(CoverageShape shape, std::span<const std::uint8_t> membership,
                     std::span<std::uint8_t> counts);
}  // namespace avx2

// dst |= src, dst &= src, dst &= ~src. Spans must have equal length.
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void andnot_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
std::size_t popcount_words(std::span<const std::uint64_t> words);
void coverage_counts(CoverageShape shape, std::span<const std::uint8_t> membership,
                     std::span<std::uint8_t> counts);

}  // namespace mixdom::kernels
