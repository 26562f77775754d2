#include "mixdom/petersen_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "mixdom/errors.hpp"

namespace mixdom {

void validate(GraphSpec spec) {
    if (spec.n < 3)
        throw InvalidSpec("P(n,k) needs n >= 3, got n = " + std::to_string(spec.n));
    if (spec.k < 1 || 2 * spec.k >= spec.n)
        throw InvalidSpec("P(n,k) needs 1 <= k < n/2, got n = " + std::to_string(spec.n) +
                          ", k = " + std::to_string(spec.k));
}

Graph::Graph(GraphSpec spec) : spec_(spec) {
    validate(spec);
    const std::uint32_t n = spec.n;
    const ElementId edge_base = 2 * n;

    edge_ends_.resize(3 * std::size_t{n});
    for (std::uint32_t i = 0; i < n; ++i) {
        edge_ends_[i] = {i, (i + 1) % n};                  // v_i v_{i+1}
        edge_ends_[n + i] = {i, n + i};                    // v_i u_i
        edge_ends_[2 * n + i] = {n + i, n + (i + spec.k) % n};  // u_i u_{i+k}
    }

    std::vector<std::size_t> filled(vertex_count(), 0);
    incident_.resize(vertex_count());
    for (std::size_t e = 0; e < edge_ends_.size(); ++e) {
        const auto id = static_cast<ElementId>(edge_base + e);
        for (ElementId end : {edge_ends_[e].a, edge_ends_[e].b}) incident_[end][filled[end]++] = id;
    }

    neighborhoods_.resize(element_count());
    for (ElementId x = 0; x < element_count(); ++x) {
        std::vector<ElementId> nb{x};
        if (is_vertex(x)) {
            for (ElementId e : incident_[x]) {
                nb.push_back(e);
                const auto [a, b] = edge_ends_[e - edge_base];
                nb.push_back(a == x ? b : a);
            }
        } else {
            const auto [a, b] = edge_ends_[x - edge_base];
            nb.push_back(a);
            nb.push_back(b);
            for (ElementId end : {a, b})
                for (ElementId e : incident_[end])
                    if (e != x) nb.push_back(e);
        }
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        // Simple cubic graph: 3 neighbours + 3 incident edges, or 2 ends + 4 edges.
        if (nb.size() != kNeighborhoodSize)
            throw InvalidSpec("unexpected neighborhood size in P(" + std::to_string(n) + "," +
                              std::to_string(spec.k) + ")");
        std::copy(nb.begin(), nb.end(), neighborhoods_[x].begin());
    }
}

ElementId Graph::id(Element e) const {
    if (e.index >= spec_.n)
        throw UnknownElement("element index " + std::to_string(e.index) + " outside [0, " +
                             std::to_string(spec_.n) + ")");
    return to_id(e, spec_.n);
}

Element Graph::element(ElementId id) const {
    if (!contains(id))
        throw UnknownElement("element id " + std::to_string(id) + " outside [0, " +
                             std::to_string(element_count()) + ")");
    return from_id(id, spec_.n);
}

EdgeEnds Graph::endpoints(ElementId edge) const {
    if (!contains(edge) || is_vertex(edge))
        throw UnknownElement("element id " + std::to_string(edge) + " is not an edge");
    return edge_ends_[edge - vertex_count()];
}

std::span<const ElementId> Graph::incident_edges(ElementId vertex) const {
    if (!is_vertex(vertex))
        throw UnknownElement("element id " + std::to_string(vertex) + " is not a vertex");
    return incident_[vertex];
}

std::span<const ElementId, Graph::kNeighborhoodSize> Graph::neighborhood(ElementId id) const {
    if (!contains(id))
        throw UnknownElement("element id " + std::to_string(id) + " outside [0, " +
                             std::to_string(element_count()) + ")");
    return neighborhoods_[id];
}

Graph build_graph(GraphSpec spec) { return Graph(spec); }

ElementSet mixed_neighborhood(const Graph& graph, ElementId xi) {
    const auto nb = graph.neighborhood(xi);
    return ElementSet(graph.element_count(), std::span<const ElementId>(nb.data(), nb.size()));
}

ElementSet mixed_neighborhood(const Graph& graph, Element xi) {
    return mixed_neighborhood(graph, graph.id(xi));
}

BlockDecomposition decompose(const Graph& graph, std::uint32_t t) {
    const std::uint32_t n = graph.n();
    if (t < 1 || t > n)
        throw InvalidFactor("partitioning factor must lie in [1, " + std::to_string(n) + "], got " +
                            std::to_string(t));

    BlockDecomposition d;
    d.factor = t;
    d.full_blocks = n / t;
    d.remainder = n % t;
    d.blocks.resize((n + t - 1) / t);
    for (std::uint32_t b = 0; b < d.blocks.size(); ++b) {
        Block& block = d.blocks[b];
        block.first_column = b * t;
        block.column_count = std::min(t, n - b * t);
        for (std::uint32_t j = block.first_column; j < block.first_column + block.column_count; ++j)
            block.vertices.push_back(j);
        for (std::uint32_t j = block.first_column; j < block.first_column + block.column_count; ++j)
            block.vertices.push_back(n + j);
    }

    // An edge belongs to the block of its construction index; it is internal
    // when its other end falls in the same block.
    for (ElementId e = static_cast<ElementId>(graph.vertex_count()); e < graph.element_count(); ++e) {
        const Element el = graph.element(e);
        const auto [a, b] = graph.endpoints(e);
        const std::uint32_t col_a = a % n;
        const std::uint32_t col_b = b % n;
        const std::uint32_t owner = d.block_of(el.index);
        Block& block = d.blocks[owner];
        if (d.block_of(col_a) == owner && d.block_of(col_b) == owner)
            block.internal_edges.push_back(e);
        else
            block.cross_edges.push_back(e);
    }
    return d;
}

std::string to_dot(const Graph& graph, const ElementSet* highlight) {
    const std::uint32_t n = graph.n();
    const auto marked = [&](ElementId id) { return highlight != nullptr && highlight->contains(id); };
    const auto name = [n](ElementId vertex) {
        return (vertex < n ? "v" : "u") + std::to_string(vertex % n);
    };

    std::ostringstream out;
    out << "graph \"P(" << n << "," << graph.k() << ")\" {\n";
    out << "  layout=neato;\n  node [shape=circle, width=0.3, fixedsize=true, fontsize=9];\n";
    for (ElementId v = 0; v < graph.vertex_count(); ++v) {
        const double radius = v < n ? 4.0 : 2.2;
        const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * (v % n) / n;
        out << "  " << name(v) << " [pos=\"" << radius * std::cos(angle) << ","
            << radius * std::sin(angle) << "!\"";
        if (marked(v)) out << ", style=filled, fillcolor=black, fontcolor=white";
        out << "];\n";
    }
    for (ElementId e = static_cast<ElementId>(graph.vertex_count()); e < graph.element_count(); ++e) {
        const auto [a, b] = graph.endpoints(e);
        out << "  " << name(a) << " -- " << name(b);
        if (marked(e)) out << " [style=bold, penwidth=4]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_schema(const Graph& graph) {
    std::ostringstream out;
    out << "# id tag index label\n";
    for (ElementId id = 0; id < graph.element_count(); ++id) {
        const Element e = graph.element(id);
        out << id << ' ' << kind_token(e.kind) << ' ' << e.index << ' '
            << label(e, graph.n(), graph.k()) << '\n';
    }
    return out.str();
}

}  // namespace mixdom
