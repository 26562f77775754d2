#include "mixdom/domination.hpp"

#include <numeric>
#include <stdexcept>

#include "mixdom/kernels.hpp"

namespace mixdom {

namespace {

std::vector<std::uint8_t> coverage(const Graph& graph, const ElementSet& set) {
    if (set.universe() != graph.element_count())
        throw std::invalid_argument("element set does not match the graph's universe");
    std::vector<std::uint8_t> membership(graph.element_count(), 0);
    set.for_each([&](ElementId id) { membership[id] = 1; });
    std::vector<std::uint8_t> counts(graph.element_count(), 0);
    kernels::coverage_counts({graph.n(), graph.k()}, membership, counts);
    return counts;
}

}  // namespace

DominationReport verify(const Graph& graph, const ElementSet& set) {
    const auto counts = coverage(graph, set);
    DominationReport report;
    report.uncovered = graph.empty_set();
    report.rd_per_element.resize(counts.size());
    for (ElementId id = 0; id < counts.size(); ++id) {
        const int rd = static_cast<int>(counts[id]) - 1;
        report.rd_per_element[id] = rd;
        report.rd_total += rd;
        if (rd < 0) report.uncovered.insert(id);
    }
    report.is_dominating = report.uncovered.empty();
    return report;
}

long redomination(const Graph& graph, const ElementSet& set, const ElementSet& elements) {
    if (elements.universe() != graph.element_count())
        throw std::invalid_argument("element set does not match the graph's universe");
    const auto counts = coverage(graph, set);
    long total = 0;
    elements.for_each([&](ElementId id) { total += static_cast<long>(counts[id]) - 1; });
    return total;
}

long naive_lower_bound(long n) { return 5 * n / 7 + 1; }

Fraction gamma_from_rd(long n, long rd_total) {
    const long num = 5 * n + rd_total;
    const long g = std::gcd(num, 7L);
    return {num / g, 7 / g};
}

ElementSet greedy_complete(const Graph& graph, const ElementSet& partial) {
    ElementSet result = partial;
    const auto counts = coverage(graph, partial);
    const std::size_t total = graph.element_count();

    std::vector<char> covered(total);
    std::size_t remaining = 0;
    for (std::size_t id = 0; id < total; ++id) {
        covered[id] = counts[id] > 0;
        remaining += covered[id] ? 0 : 1;
    }

    // gain[x] = |N_m[x] \ covered|; neighborhoods are symmetric, so covering y
    // lowers the gain of every member of N_m[y].
    std::vector<int> gain(total, 0);
    for (ElementId x = 0; x < total; ++x)
        for (ElementId y : graph.neighborhood(x)) gain[x] += covered[y] ? 0 : 1;

    while (remaining > 0) {
        ElementId best = 0;
        for (ElementId x = 1; x < total; ++x)
            if (gain[x] > gain[best]) best = x;
        result.insert(best);
        for (ElementId y : graph.neighborhood(best)) {
            if (covered[y]) continue;
            covered[y] = 1;
            --remaining;
            for (ElementId z : graph.neighborhood(y)) --gain[z];
        }
    }
    return result;
}

}  // namespace mixdom
