#include "mixdom/element.hpp"

#include <array>

namespace mixdom {

namespace {

constexpr std::array<std::string_view, kElementKinds> kTokens = {"v", "u", "vv", "vu", "uu"};

}  // namespace

std::string_view kind_token(ElementKind kind) { return kTokens[static_cast<std::size_t>(kind)]; }

std::optional<ElementKind> parse_kind_token(std::string_view token) {
    for (std::size_t i = 0; i < kTokens.size(); ++i)
        if (kTokens[i] == token) return static_cast<ElementKind>(i);
    return std::nullopt;
}

std::string label(Element e, std::uint32_t n, std::uint32_t k) {
    const auto i = std::to_string(e.index);
    switch (e.kind) {
    case ElementKind::OuterVertex: return "v" + i;
    case ElementKind::InnerVertex: return "u" + i;
    case ElementKind::OuterEdge: return "v" + i + "v" + std::to_string((e.index + 1) % n);
    case ElementKind::Spoke: return "v" + i + "u" + i;
    case ElementKind::InnerEdge: return "u" + i + "u" + std::to_string((e.index + k) % n);
    }
    return "?";
}

}  // namespace mixdom
