#include "mixdom/element_set.hpp"

#include <stdexcept>
#include <string>

#include "mixdom/errors.hpp"
#include "mixdom/kernels.hpp"

namespace mixdom {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<ElementId> ids)
    : ElementSet(universe) {
    for (ElementId id : ids) insert(id);
}

ElementSet::ElementSet(std::size_t universe, std::span<const ElementId> ids) : ElementSet(universe) {
    for (ElementId id : ids) insert(id);
}

ElementSet ElementSet::full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (const std::size_t tail = universe % 64; tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

std::size_t ElementSet::size() const { return kernels::popcount_words(words_); }

bool ElementSet::empty() const {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

bool ElementSet::contains(ElementId id) const {
    return id < universe_ && ((words_[id / 64] >> (id % 64)) & 1U) != 0;
}

bool ElementSet::insert(ElementId id) {
    if (id >= universe_)
        throw UnknownElement("element id " + std::to_string(id) + " outside universe of " +
                             std::to_string(universe_));
    const std::uint64_t bit = std::uint64_t{1} << (id % 64);
    const bool fresh = (words_[id / 64] & bit) == 0;
    words_[id / 64] |= bit;
    return fresh;
}

bool ElementSet::erase(ElementId id) {
    if (!contains(id)) return false;
    words_[id / 64] &= ~(std::uint64_t{1} << (id % 64));
    return true;
}

void ElementSet::clear() {
    for (auto& w : words_) w = 0;
}

std::vector<ElementId> ElementSet::ids() const {
    std::vector<ElementId> out;
    out.reserve(size());
    for_each([&](ElementId id) { out.push_back(id); });
    return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
    check_same_universe(other);
    kernels::or_words(words_, other.words_);
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
    check_same_universe(other);
    kernels::and_words(words_, other.words_);
    return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
    check_same_universe(other);
    kernels::andnot_words(words_, other.words_);
    return *this;
}

void ElementSet::check_same_universe(const ElementSet& other) const {
    if (universe_ != other.universe_)
        throw std::invalid_argument("ElementSet universes differ: " + std::to_string(universe_) +
                                    " vs " + std::to_string(other.universe_));
}

}  // namespace mixdom
