#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mixdom/element.hpp"
#include "mixdom/element_set.hpp"

namespace mixdom {

// Line-oriented element set file:
//
//   # comment
//   n 8
//   k 1
//   source K1_Block8
//   size 6
//   u 0
//   vv 1
//   ...
//
// Header keys come first; `n` and `k` are required. Element lines are a
// family token (v, u, vv, vu, uu) and an index in [0, n), or `id <canonical>`.
// Files are written in ascending canonical id order.
struct SetFile {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::string source;
    std::vector<Element> elements;  // ascending canonical id, no duplicates
    // Optional extra header entries (predicted, raw_valid, repaired, optimum,
    // proved, nodes), written after `size` in key order.
    std::map<std::string, std::string> meta;

    ElementSet to_element_set() const;
    static SetFile from_element_set(std::uint32_t n, std::uint32_t k, std::string source,
                                    const ElementSet& set);
};

std::string write_set_file(const SetFile& file);

// Throws ParseError on unknown keys, bad numbers, indices outside [0, n),
// duplicate elements, a missing n/k, or a size header that disagrees with the
// element count.
SetFile parse_set_file(std::string_view text);

}  // namespace mixdom
