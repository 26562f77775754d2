#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "mixdom/element_set.hpp"
#include "mixdom/petersen_graph.hpp"

namespace mixdom {

struct SolveBudget {
    std::uint64_t max_nodes = UINT64_MAX;
    std::chrono::duration<double> max_time = std::chrono::hours(24);
    // Claimed upper bound on the optimum; the search looks for sets of at
    // most this size first.
    std::optional<int> upper_bound_hint;
    // 0 means MIXDOM_THREADS, or all hardware threads when unset.
    unsigned threads = 0;
};

struct OptimalResult {
    int optimum = 0;  // gamma_md when proved, otherwise the best size found
    ElementSet witness;
    bool proved = false;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
};

// Branch and bound over the element universe: branch on the members of the
// neighborhood of the lowest uncovered id, prune on size + ceil(uncovered/7).
// Throws std::invalid_argument for a non-positive budget limit.
OptimalResult solve_exact(const Graph& graph, const SolveBudget& budget = {});

// Enumerates subsets by increasing size in lexicographic id order; the witness
// is the lexicographically smallest optimal set. Throws NoSolutionWithin when
// no dominating set of at most max_size elements exists.
OptimalResult solve_exhaustive(const Graph& graph, int max_size);

// Worker count used when SolveBudget::threads is 0.
unsigned default_thread_count();

}  // namespace mixdom
