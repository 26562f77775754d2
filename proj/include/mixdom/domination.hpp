#pragma once

#include <cstdint>
#include <vector>

#include "mixdom/element_set.hpp"
#include "mixdom/petersen_graph.hpp"

namespace mixdom {

struct DominationReport {
    bool is_dominating = false;
    ElementSet uncovered;
    // |N_m[id] ∩ S| - 1 per canonical id; -1 marks an uncovered element.
    std::vector<int> rd_per_element;
    long rd_total = 0;
};

DominationReport verify(const Graph& graph, const ElementSet& set);

// rd_S(X): sum of per-element redomination over X. Elements of X that S does
// not dominate contribute -1 each.
long redomination(const Graph& graph, const ElementSet& set, const ElementSet& elements);

// Smallest integer strictly greater than 5n/7.
long naive_lower_bound(long n);

struct Fraction {
    long num = 0;
    long den = 1;

    bool is_integer() const { return den == 1; }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// (5n + rd_total) / 7 in lowest terms.
Fraction gamma_from_rd(long n, long rd_total);

// Adds elements one at a time, each maximizing the number of newly covered
// elements (ties to the smallest id), until the set dominates.
ElementSet greedy_complete(const Graph& graph, const ElementSet& partial);

}  // namespace mixdom
