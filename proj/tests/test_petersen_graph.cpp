#include <doctest.h>

#include <algorithm>
#include <set>

#include "mixdom/errors.hpp"
#include "mixdom/petersen_graph.hpp"
#include "oracle.hpp"

using namespace mixdom;

TEST_CASE("build_graph sizes and degrees") {
    SUBCASE("P(10,3)") {
        const Graph g = build_graph({10, 3});
        CHECK(g.vertex_count() == 20);
        CHECK(g.edge_count() == 30);
        for (ElementId v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
    }
    SUBCASE("Petersen graph P(5,2)") {
        const Graph g = build_graph({5, 2});
        CHECK(g.vertex_count() == 10);
        CHECK(g.edge_count() == 15);
    }
    SUBCASE("edges are distinct as vertex pairs") {
        for (std::uint32_t n = 3; n < 30; ++n)
            for (std::uint32_t k = 1; 2 * k < n; ++k) {
                const Graph g({n, k});
                std::set<std::pair<ElementId, ElementId>> pairs;
                for (ElementId e = 2 * n; e < 5 * n; ++e) {
                    auto [a, b] = g.endpoints(e);
                    pairs.insert({std::min(a, b), std::max(a, b)});
                }
                CHECK(pairs.size() == 3 * n);
            }
    }
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(build_graph({4, 2}), InvalidSpec);  // k = n/2
    CHECK_THROWS_AS(build_graph({2, 1}), InvalidSpec);
    CHECK_THROWS_AS(build_graph({7, 0}), InvalidSpec);
    CHECK_THROWS_AS(build_graph({9, 5}), InvalidSpec);
    CHECK_NOTHROW(build_graph({9, 4}));
}

TEST_CASE("mixed neighborhood examples") {
    SUBCASE("P(5,1) outer vertex 0") {
        const Graph g({5, 1});
        const ElementSet nb = mixed_neighborhood(g, outer_vertex(0));
        const ElementSet expected(g.element_count(),
                                  {g.id(outer_vertex(0)), g.id(outer_vertex(1)), g.id(outer_vertex(4)),
                                   g.id(inner_vertex(0)), g.id(outer_edge(0)), g.id(outer_edge(4)), g.id(spoke(0))});
        CHECK(nb == expected);
        CHECK(nb.size() == 7);
    }
    SUBCASE("P(8,2) inner edge u0u2") {
        const Graph g({8, 2});
        const ElementSet expected(g.element_count(),
                                  {g.id(inner_edge(0)), g.id(inner_vertex(0)), g.id(inner_vertex(2)), g.id(spoke(0)),
                                   g.id(spoke(2)), g.id(inner_edge(6)), g.id(inner_edge(2))});
        CHECK(mixed_neighborhood(g, inner_edge(0)) == expected);
        // cross-check with the reference model
        const oracle::RefGraph ref(8, 2);
        std::set<int> ids;
        expected.for_each([&](ElementId id) { ids.insert(static_cast<int>(id)); });
        CHECK(ref.nb[4 * 8 + 0] == ids);
    }
    SUBCASE("P(10,3) spoke 0") {
        const Graph g({10, 3});
        const ElementSet nb = mixed_neighborhood(g, spoke(0));
        CHECK(nb.size() == 7);
        CHECK(nb.contains(g.id(outer_vertex(0))));
        CHECK(nb.contains(g.id(inner_vertex(0))));
    }
    SUBCASE("unknown element") {
        const Graph g({6, 1});
        CHECK_THROWS_AS(mixed_neighborhood(g, ElementId{30}), UnknownElement);
        CHECK_THROWS_AS(mixed_neighborhood(g, outer_edge(6)), UnknownElement);
    }
}

TEST_CASE("neighborhood properties over a grid of P(n,k)") {
    for (std::uint32_t n = 3; n <= 40; ++n) {
        for (std::uint32_t k = 1; 2 * k < n; ++k) {
            const Graph g({n, k});
            const oracle::RefGraph ref(static_cast<int>(n), static_cast<int>(k));
            for (ElementId x = 0; x < g.element_count(); ++x) {
                const auto nb = g.neighborhood(x);
                REQUIRE(nb.size() == 7);
                REQUIRE(std::set<int>(nb.begin(), nb.end()) == ref.nb[x]);
                // symmetry
                for (ElementId y : nb) {
                    const auto back = g.neighborhood(y);
                    REQUIRE(std::find(back.begin(), back.end(), x) != back.end());
                }
                // id round trip
                REQUIRE(g.id(g.element(x)) == x);
            }
        }
    }
}

TEST_CASE("decompose") {
    SUBCASE("P(10,1), t = 8") {
        const BlockDecomposition d = decompose(Graph({10, 1}), 8);
        REQUIRE(d.blocks.size() == 2);
        CHECK(d.blocks[0].vertices.size() == 16);
        CHECK(d.blocks[1].vertices.size() == 4);
        CHECK(d.full_blocks == 1);
        CHECK(d.remainder == 2);
    }
    SUBCASE("P(8,2), t = 4") {
        const BlockDecomposition d = decompose(Graph({8, 2}), 4);
        CHECK(d.blocks.size() == 2);
        CHECK(d.remainder == 0);
        CHECK(d.blocks[0].vertices.size() == 8);
        CHECK(d.blocks[1].vertices.size() == 8);
    }
    SUBCASE("P(9,2), t = 4") {
        const Graph g({9, 2});
        const BlockDecomposition d = decompose(g, 4);
        REQUIRE(d.blocks.size() == 3);
        CHECK(d.blocks[0].vertices == std::vector<ElementId>{0, 1, 2, 3, 9, 10, 11, 12});
        CHECK(d.blocks[1].vertices == std::vector<ElementId>{4, 5, 6, 7, 13, 14, 15, 16});
        CHECK(d.blocks[2].vertices == std::vector<ElementId>{8, 17});  // {v8, u8}
        // G[V_0] of P(9,2): 3 rim edges, 4 spokes, u0u2 and u1u3
        CHECK(d.blocks[0].internal_edges.size() == 9);
    }
    SUBCASE("invalid factor") {
        const Graph g({9, 2});
        CHECK_THROWS_AS(decompose(g, 0), InvalidFactor);
        CHECK_THROWS_AS(decompose(g, 10), InvalidFactor);
    }
    SUBCASE("partition invariants for every factor") {
        for (std::uint32_t n : {5U, 12U, 17U}) {
            for (std::uint32_t k = 1; 2 * k < n; ++k) {
                const Graph g({n, k});
                for (std::uint32_t t = 1; t <= n; ++t) {
                    const BlockDecomposition d = decompose(g, t);
                    REQUIRE(d.blocks.size() == (n + t - 1) / t);
                    std::multiset<ElementId> vertices, edges;
                    for (const Block& b : d.blocks) {
                        vertices.insert(b.vertices.begin(), b.vertices.end());
                        edges.insert(b.internal_edges.begin(), b.internal_edges.end());
                        edges.insert(b.cross_edges.begin(), b.cross_edges.end());
                    }
                    REQUIRE(vertices.size() == 2 * n);
                    REQUIRE(std::set<ElementId>(vertices.begin(), vertices.end()).size() == 2 * n);
                    REQUIRE(edges.size() == 3 * n);
                    REQUIRE(std::set<ElementId>(edges.begin(), edges.end()).size() == 3 * n);
                }
            }
        }
    }
}

TEST_CASE("DOT export") {
    const Graph g({10, 3});
    ElementSet s = g.empty_set();
    s.insert(g.id(inner_vertex(0)));
    s.insert(g.id(outer_edge(1)));
    const std::string dot = to_dot(g, &s);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 2 + 20 + 30 + 1);
    CHECK(dot.find("u0 [pos=") != std::string::npos);
    CHECK(dot.find("fillcolor=black") != std::string::npos);
    CHECK(dot.find("v1 -- v2 [style=bold") != std::string::npos);
    CHECK(dot.find("u0 -- u3;") != std::string::npos);
}
