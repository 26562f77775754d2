#pragma once

#include <stdexcept>
#include <string>

namespace mixdom {

// n < 3, k < 1 or k >= n/2.
struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Canonical id or element index outside the graph's universe.
struct UnknownElement : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Partitioning factor outside [1, n].
struct InvalidFactor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation called outside the range of n/k it is defined for.
struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NoSolutionWithin : std::runtime_error {
    explicit NoSolutionWithin(int max_size)
        : std::runtime_error("no mixed dominating set of size <= " + std::to_string(max_size)),
          max_size(max_size) {}
    int max_size;
};

// Malformed set file or command-line value.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mixdom
