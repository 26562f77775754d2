#include <doctest.h>

#include <set>

#include "mixdom/constructions.hpp"
#include "mixdom/domination.hpp"
#include "mixdom/errors.hpp"
#include "mixdom/formulas.hpp"
#include "oracle.hpp"

using namespace mixdom;

namespace {

bool oracle_dominates(const ConstructionOutput& out, std::uint32_t n, std::uint32_t k) {
    std::set<int> s;
    out.set.for_each([&](ElementId id) { s.insert(static_cast<int>(id)); });
    return oracle::RefGraph(static_cast<int>(n), static_cast<int>(k)).dominates(s);
}

}  // namespace

TEST_CASE("k = 1 block-8 sets") {
    SUBCASE("n = 8") {
        const Graph g({8, 1});
        const ConstructionOutput out = construct_k1(g);
        const ElementSet expected(40, {g.id(inner_vertex(0)), g.id(outer_edge(1)), g.id(inner_edge(2)),
                                       g.id(outer_vertex(4)), g.id(inner_edge(5)), g.id(outer_edge(6))});
        CHECK(out.set == expected);
        CHECK(out.raw_valid);
        CHECK_FALSE(out.repaired);
        CHECK(out.predicted_size == 6);
    }
    SUBCASE("n = 10 adds u8 and v9v0") {
        const Graph g({10, 1});
        const ConstructionOutput out = construct_k1(g);
        CHECK(out.set.size() == 8);
        CHECK(out.set.contains(g.id(inner_vertex(8))));
        CHECK(out.set.contains(g.id(outer_edge(9))));
        CHECK(out.raw_valid);
    }
    SUBCASE("sweep") {
        for (std::uint32_t n = 8; n < 120; ++n) {
            const ConstructionOutput out = construct_k1(n);
            REQUIRE(verify(Graph({n, 1}), out.set).is_dominating);
            REQUIRE(out.raw_valid);
            REQUIRE(static_cast<long>(out.set.size()) == gamma_k1(n).value);
            if (n < 30) REQUIRE(oracle_dominates(out, n, 1));
        }
    }
    CHECK_THROWS_AS(construct_k1(7), OutOfRange);
    CHECK_THROWS_AS(construct_k1(Graph({9, 2})), OutOfRange);
}

TEST_CASE("k = 2 block-4 sets") {
    SUBCASE("n = 8") {
        const Graph g({8, 2});
        const ElementSet expected(40, {g.id(spoke(0)), g.id(inner_edge(1)), g.id(outer_vertex(2)), g.id(spoke(4)),
                                       g.id(inner_edge(5)), g.id(outer_vertex(6))});
        CHECK(construct_k2_block4(g).set == expected);
    }
    CHECK(construct_k2_block4(9).set.size() == 7);
    CHECK(construct_k2_block4(12).set.size() == 9);
    CHECK(construct_k2_block4(5).set.size() == 4);
    for (std::uint32_t n = 5; n < 120; ++n) {
        const ConstructionOutput out = construct_k2_block4(n);
        REQUIRE(out.raw_valid);
        REQUIRE(static_cast<long>(out.set.size()) == gamma_k2(n).value);
        if (n < 30) REQUIRE(oracle_dominates(out, n, 2));
    }
    CHECK_THROWS_AS(construct_k2_block4(4), OutOfRange);
}

TEST_CASE("k = 2 block-8 sets") {
    CHECK(construct_k2_block8(16).set.size() == 12);
    CHECK(construct_k2_block8(9).set.size() == 8);
    CHECK(construct_k2_block8(11).set.size() == 9);
    CHECK(construct_k2_block8(9).known_suboptimal);
    CHECK_FALSE(construct_k2_block8(11).known_suboptimal);
    for (std::uint32_t n = 8; n < 120; ++n) {
        const ConstructionOutput out = construct_k2_block8(n);
        REQUIRE(out.raw_valid);
        REQUIRE(static_cast<long>(out.set.size()) == gamma_k2_remark(n).value);
        if (n < 30) REQUIRE(oracle_dominates(out, n, 2));
    }
    CHECK_THROWS_AS(construct_k2_block8(7), OutOfRange);
}

TEST_CASE("general pattern") {
    for (std::uint32_t k : {4U, 5U}) {
        const ConstructionOutput out = construct_general(27, k);
        CHECK(out.set.size() == 21);
        CHECK(out.raw_valid);
    }
    CHECK(construct_general(13, 3).set.size() <= 11);

    for (std::uint32_t k = 3; k <= 8; ++k) {
        const std::uint32_t t = 4 * (k / 2) + 1;
        for (std::uint32_t n = 2 * k + 1; n < 160; ++n) {
            const ConstructionOutput out = construct_general(n, k);
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(verify(Graph({n, k}), out.set).is_dominating);
            REQUIRE(static_cast<long>(out.set.size()) <= upper_bound_general(n, k).value);
            if (n % t % 2 == 0 && n >= t) REQUIRE(out.raw_valid);
            if (out.repaired) REQUIRE_FALSE(out.log.empty());
            if (n < 25) REQUIRE(oracle_dominates(out, n, k));
        }
    }
    CHECK_THROWS_AS(construct_general(9, 2), OutOfRange);
}

TEST_CASE("repair accounting") {
    // odd remainders take the table correction; the final set differs from
    // the raw one exactly by the logged additions and removals
    const ConstructionOutput out = construct_general(13, 3);
    REQUIRE(out.repaired);
    CHECK_FALSE(out.raw_valid);
    CHECK((out.repair_added & out.repair_removed).empty());
    CHECK(out.repair_added.is_subset_of(out.set));
    CHECK((out.repair_removed & out.set).empty());
}

TEST_CASE("pattern names") {
    for (Pattern p : {Pattern::K1_Block8, Pattern::K2_Block4, Pattern::K2_Block8, Pattern::General})
        CHECK(parse_pattern(pattern_name(p)) == p);
    CHECK_FALSE(parse_pattern("nope").has_value());
    CHECK(default_pattern(1) == Pattern::K1_Block8);
    CHECK(default_pattern(2) == Pattern::K2_Block4);
    CHECK(default_pattern(6) == Pattern::General);
    CHECK_THROWS_AS(construct(Pattern::K2_Block8, Graph({9, 1})), OutOfRange);
}
