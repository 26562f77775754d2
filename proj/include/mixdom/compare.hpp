#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixdom/constructions.hpp"
#include "mixdom/exact_solver.hpp"
#include "mixdom/formulas.hpp"

namespace mixdom {

// One instance of the construction / formula / exact-optimum comparison.
struct CompareRow {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::optional<long> construction_size;  // empty when no pattern applies
    bool construction_raw_valid = false;
    long formula_value = 0;
    FormulaKind formula_kind = FormulaKind::Exact;
    std::string formula_source;
    std::optional<long> exact_optimum;  // set only when proved
    bool proved = false;
    std::uint64_t nodes = 0;

    // construction_size - exact_optimum
    std::optional<long> gap() const;
    // formula_value - exact_optimum
    std::optional<long> formula_gap() const;
    // Proved optimum contradicts an Exact formula.
    bool contradicts_formula() const;
};

CompareRow compare_instance(std::uint32_t n, std::uint32_t k, const SolveBudget& budget);

// Fixed column order:
// n k construction raw_valid formula kind case exact proved gap formula_gap nodes
std::string render_compare_tsv(const std::vector<CompareRow>& rows);
std::string render_compare_text(const std::vector<CompareRow>& rows);

}  // namespace mixdom
