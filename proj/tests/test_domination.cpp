#include <doctest.h>

#include <random>
#include <set>

#include "mixdom/domination.hpp"
#include "oracle.hpp"

using namespace mixdom;

namespace {

// Block-8 set for P(8,1).
ElementSet p8_block(const Graph& g) {
    return ElementSet(g.element_count(), {g.id(inner_vertex(0)), g.id(outer_edge(1)), g.id(inner_edge(2)),
                                          g.id(outer_vertex(4)), g.id(inner_edge(5)), g.id(outer_edge(6))});
}

std::set<int> to_std(const ElementSet& s) {
    std::set<int> out;
    s.for_each([&](ElementId id) { out.insert(static_cast<int>(id)); });
    return out;
}

}  // namespace

TEST_CASE("verify") {
    SUBCASE("block set on P(8,1)") {
        const Graph g({8, 1});
        const DominationReport r = verify(g, p8_block(g));
        CHECK(r.is_dominating);
        CHECK(r.uncovered.empty());
        CHECK(r.rd_total == 2);
        CHECK(r.rd_per_element.size() == 40);
    }
    SUBCASE("empty set") {
        const Graph g({7, 2});
        const DominationReport r = verify(g, g.empty_set());
        CHECK_FALSE(r.is_dominating);
        CHECK(r.uncovered.size() == 35);
        for (int rd : r.rd_per_element) CHECK(rd == -1);
    }
    SUBCASE("one element short") {
        const Graph g({8, 1});
        ElementSet s = p8_block(g);
        s.erase(g.id(outer_vertex(4)));
        const DominationReport r = verify(g, s);
        CHECK_FALSE(r.is_dominating);
        CHECK_FALSE(r.uncovered.empty());
    }
    SUBCASE("universe mismatch") {
        const Graph g({8, 1});
        CHECK_THROWS(verify(g, ElementSet(45)));
    }
}

TEST_CASE("redomination") {
    const Graph g({8, 1});
    const ElementSet s = p8_block(g);
    CHECK(redomination(g, s, ElementSet::full(40)) == 2);
    CHECK(redomination(g, s, g.empty_set()) == 0);
    // Counted directly from the reference model
    const oracle::RefGraph ref(8, 1);
    const auto c = ref.counts(to_std(s));
    for (ElementId x = 0; x < 40; ++x) {
        const ElementSet single(40, {x});
        CHECK(redomination(g, s, single) == c[x] - 1);
    }
    // Uncovered elements contribute -1
    CHECK(redomination(g, g.empty_set(), ElementSet(40, {0, 1, 2})) == -3);
}

TEST_CASE("naive lower bound and gamma from rd") {
    CHECK(naive_lower_bound(7) == 6);
    CHECK(naive_lower_bound(5) == 4);
    CHECK(naive_lower_bound(14) == 11);
    CHECK(naive_lower_bound(8) == 6);
    for (long n = 3; n < 500; ++n) {
        CHECK(7 * naive_lower_bound(n) > 5 * n);
        CHECK(7 * (naive_lower_bound(n) - 1) <= 5 * n);
    }
    CHECK(gamma_from_rd(8, 2) == Fraction{6, 1});
    CHECK(gamma_from_rd(7, 7) == Fraction{6, 1});
    CHECK(gamma_from_rd(7, 0) == Fraction{5, 1});
    CHECK(gamma_from_rd(8, 0) == Fraction{40, 7});
    CHECK_FALSE(gamma_from_rd(8, 0).is_integer());
}

TEST_CASE("greedy completion") {
    SUBCASE("dominating input is a fixed point") {
        const Graph g({8, 1});
        CHECK(greedy_complete(g, p8_block(g)) == p8_block(g));
    }
    SUBCASE("from empty on P(5,1)") {
        const Graph g({5, 1});
        const ElementSet s = greedy_complete(g, g.empty_set());
        CHECK(verify(g, s).is_dominating);
        CHECK(s.size() >= 4);
    }
    SUBCASE("one missing element is restored with a single addition") {
        const Graph g({8, 1});
        ElementSet s = p8_block(g);
        s.erase(g.id(inner_edge(5)));
        const ElementSet done = greedy_complete(g, s);
        CHECK(verify(g, done).is_dominating);
        CHECK(done.size() == 6);
        CHECK(s.is_subset_of(done));
    }
}

TEST_CASE("random sets: oracle agreement, monotonicity and the rd identity") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::uint32_t>(std::uniform_int_distribution<int>(5, 30)(rng));
        const auto k = static_cast<std::uint32_t>(std::uniform_int_distribution<int>(1, (n - 1) / 2)(rng));
        const Graph g({n, k});
        const oracle::RefGraph ref(static_cast<int>(n), static_cast<int>(k));
        ElementSet s = g.empty_set();
        std::bernoulli_distribution coin(0.15);
        for (ElementId x = 0; x < g.element_count(); ++x)
            if (coin(rng)) s.insert(x);

        const DominationReport r = verify(g, s);
        REQUIRE(r.is_dominating == ref.dominates(to_std(s)));
        const auto c = ref.counts(to_std(s));
        for (ElementId x = 0; x < g.element_count(); ++x) REQUIRE(r.rd_per_element[x] == c[x] - 1);

        const ElementSet d = greedy_complete(g, s);
        REQUIRE(s.is_subset_of(d));
        const DominationReport rd = verify(g, d);
        REQUIRE(rd.is_dominating);
        REQUIRE(rd.rd_total == 7 * static_cast<long>(d.size()) - 5 * static_cast<long>(n));
        REQUIRE(gamma_from_rd(n, rd.rd_total) == Fraction{static_cast<long>(d.size()), 1});

        // adding to a dominating set keeps it dominating
        ElementSet bigger = d;
        bigger.insert(static_cast<ElementId>(rng() % g.element_count()));
        REQUIRE(verify(g, bigger).is_dominating);
    }
}
