#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mixdom/element.hpp"
#include "mixdom/element_set.hpp"

namespace mixdom {

struct GraphSpec {
    std::uint32_t n = 0;
    std::uint32_t k = 0;

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

// Throws InvalidSpec unless n >= 3 and 1 <= k < n/2. The boundary k = n/2 is
// rejected because it merges inner edges and breaks the 5n element count.
void validate(GraphSpec spec);

struct EdgeEnds {
    ElementId a;  // vertex ids share the canonical id space: v_i = i, u_i = n + i
    ElementId b;
};

// The generalized Petersen graph P(n,k) over its unified element universe of
// 2n vertices and 3n edges. Immutable once built.
class Graph {
public:
    static constexpr std::size_t kNeighborhoodSize = 7;

    explicit Graph(GraphSpec spec);

    GraphSpec spec() const { return spec_; }
    std::uint32_t n() const { return spec_.n; }
    std::uint32_t k() const { return spec_.k; }
    std::size_t vertex_count() const { return 2 * std::size_t{spec_.n}; }
    std::size_t edge_count() const { return edge_ends_.size(); }
    std::size_t element_count() const { return 5 * std::size_t{spec_.n}; }

    bool contains(ElementId id) const { return id < element_count(); }
    bool is_vertex(ElementId id) const { return id < vertex_count(); }

    // Checked conversions; both throw UnknownElement.
    ElementId id(Element e) const;
    Element element(ElementId id) const;

    EdgeEnds endpoints(ElementId edge) const;
    std::span<const ElementId> incident_edges(ElementId vertex) const;
    std::size_t degree(ElementId vertex) const { return incident_edges(vertex).size(); }

    // Closed mixed neighborhood, ascending ids, derived from the edge list.
    std::span<const ElementId, kNeighborhoodSize> neighborhood(ElementId id) const;

    ElementSet empty_set() const { return ElementSet(element_count()); }

private:
    GraphSpec spec_;
    std::vector<EdgeEnds> edge_ends_;                // indexed by id - 2n
    std::vector<std::array<ElementId, 3>> incident_;  // indexed by vertex id
    std::vector<std::array<ElementId, kNeighborhoodSize>> neighborhoods_;
};

Graph build_graph(GraphSpec spec);

ElementSet mixed_neighborhood(const Graph& graph, Element xi);
ElementSet mixed_neighborhood(const Graph& graph, ElementId xi);

// One block of a partition into runs of t consecutive columns (v_j, u_j).
struct Block {
    std::uint32_t first_column = 0;
    std::uint32_t column_count = 0;
    std::vector<ElementId> vertices;
    std::vector<ElementId> internal_edges;
    // Edges whose construction index lies in this block and whose other end
    // lies in another block (E_{i,i+1} when t >= k).
    std::vector<ElementId> cross_edges;
};

struct BlockDecomposition {
    std::uint32_t factor = 0;
    std::uint32_t full_blocks = 0;  // floor(n / t)
    std::uint32_t remainder = 0;    // n mod t
    std::vector<Block> blocks;      // ceil(n / t) entries

    // Index of the block holding column j.
    std::uint32_t block_of(std::uint32_t column) const { return column / factor; }
};

// Throws InvalidFactor unless 1 <= t <= n.
BlockDecomposition decompose(const Graph& graph, std::uint32_t t);

// Graphviz rendering with outer and inner rims laid out on two circles.
// Members of `highlight` are drawn filled (vertices) or bold (edges).
std::string to_dot(const Graph& graph, const ElementSet* highlight = nullptr);

// One line per canonical id: "<id> <tag> <index> <label>".
std::string to_schema(const Graph& graph);

}  // namespace mixdom
