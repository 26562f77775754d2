#include <array>
#include <stdexcept>

#include "mixdom/kernels.hpp"

namespace mixdom::kernels {

namespace {

enum : std::uint8_t { V = 0, U = 1, OE = 2, SP = 3, IE = 4 };

}  // namespace

std::array<StencilTerm, 7> coverage_stencil(std::uint32_t family, std::uint32_t k) {
    const auto kk = static_cast<std::int32_t>(k);
    switch (family) {
    case V:  // v_i: v_{i±1}, u_i, v_i v_{i+1}, v_{i-1} v_i, v_i u_i
        return {{{V, 0}, {V, -1}, {V, 1}, {U, 0}, {OE, 0}, {OE, -1}, {SP, 0}}};
    case U:  // u_i: u_{i±k}, v_i, v_i u_i, u_i u_{i+k}, u_{i-k} u_i
        return {{{U, 0}, {U, kk}, {U, -kk}, {V, 0}, {SP, 0}, {IE, 0}, {IE, -kk}}};
    case OE:  // v_i v_{i+1}: both ends, both neighbouring rim edges, both spokes
        return {{{OE, 0}, {V, 0}, {V, 1}, {OE, -1}, {OE, 1}, {SP, 0}, {SP, 1}}};
    case SP:  // v_i u_i
        return {{{SP, 0}, {V, 0}, {U, 0}, {OE, 0}, {OE, -1}, {IE, 0}, {IE, -kk}}};
    case IE:  // u_i u_{i+k}
        return {{{IE, 0}, {U, 0}, {U, kk}, {SP, 0}, {SP, kk}, {IE, -kk}, {IE, kk}}};
    default:
        throw std::out_of_range("coverage_stencil: family out of range");
    }
}

}  // namespace mixdom::kernels
