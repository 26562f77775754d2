#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixdom/element_set.hpp"
#include "mixdom/petersen_graph.hpp"

namespace mixdom {

enum class Pattern { K1_Block8, K2_Block4, K2_Block8, General };

std::string_view pattern_name(Pattern pattern);
std::optional<Pattern> parse_pattern(std::string_view name);

// K1_Block8 for k = 1, K2_Block4 for k = 2, General otherwise.
Pattern default_pattern(std::uint32_t k);

struct ConstructionOutput {
    ElementSet set;  // final set; always dominating
    Pattern pattern = Pattern::General;
    long predicted_size = 0;
    // The pattern as written dominates on its own, with no duplicate indices.
    bool raw_valid = false;
    bool repaired = false;
    ElementSet repair_added;
    ElementSet repair_removed;
    // Human-readable account of every duplicate drop and repair step.
    std::vector<std::string> log;
    // The pattern is known not to reach gamma_md for this n.
    bool known_suboptimal = false;
};

// Block-8 pattern for P(n,1), n >= 8.
ConstructionOutput construct_k1(std::uint32_t n);
ConstructionOutput construct_k1(const Graph& graph);

// Block-4 pattern for P(n,2), n >= 5; r = n mod 4 extra spokes at 4m..4m+r-1.
ConstructionOutput construct_k2_block4(std::uint32_t n);
ConstructionOutput construct_k2_block4(const Graph& graph);

// Alternate block-8 pattern for P(n,2), n >= 8.
ConstructionOutput construct_k2_block8(std::uint32_t n);
ConstructionOutput construct_k2_block8(const Graph& graph);

// Block-(4k'+1) pattern for k >= 3, k' = floor(k/2).
ConstructionOutput construct_general(std::uint32_t n, std::uint32_t k);
ConstructionOutput construct_general(const Graph& graph);

// Dispatches on `pattern`; throws OutOfRange when the pattern does not apply
// to (n, k).
ConstructionOutput construct(Pattern pattern, const Graph& graph);

}  // namespace mixdom
