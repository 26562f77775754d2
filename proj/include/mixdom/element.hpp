#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mixdom {

// The five element families of P(n,k). The numeric value is the family's
// offset (in units of n) inside the canonical id space [0, 5n).
enum class ElementKind : std::uint8_t {
    OuterVertex = 0,  // v_i
    InnerVertex = 1,  // u_i
    OuterEdge = 2,    // v_i v_{i+1}
    Spoke = 3,        // v_i u_i
    InnerEdge = 4,    // u_i u_{i+k}
};

inline constexpr std::uint32_t kElementKinds = 5;

using ElementId = std::uint32_t;

struct Element {
    ElementKind kind;
    std::uint32_t index;

    friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

constexpr Element outer_vertex(std::uint32_t i) { return {ElementKind::OuterVertex, i}; }
constexpr Element inner_vertex(std::uint32_t i) { return {ElementKind::InnerVertex, i}; }
constexpr Element outer_edge(std::uint32_t i) { return {ElementKind::OuterEdge, i}; }
constexpr Element spoke(std::uint32_t i) { return {ElementKind::Spoke, i}; }
constexpr Element inner_edge(std::uint32_t i) { return {ElementKind::InnerEdge, i}; }

constexpr bool is_vertex(ElementKind kind) {
    return kind == ElementKind::OuterVertex || kind == ElementKind::InnerVertex;
}

// No range check; see Graph::id / Graph::element for the checked versions.
constexpr ElementId to_id(Element e, std::uint32_t n) {
    return static_cast<ElementId>(e.kind) * n + e.index;
}

constexpr Element from_id(ElementId id, std::uint32_t n) {
    return {static_cast<ElementKind>(id / n), id % n};
}

// Set-file tokens: v, u, vv, vu, uu.
std::string_view kind_token(ElementKind kind);
std::optional<ElementKind> parse_kind_token(std::string_view token);

// Human label such as "v3", "u0u2" or "v7v0" (indices reduced mod n).
std::string label(Element e, std::uint32_t n, std::uint32_t k);

}  // namespace mixdom
