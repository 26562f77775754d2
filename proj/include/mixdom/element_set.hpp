#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "mixdom/element.hpp"

namespace mixdom {

// Dense membership over the canonical ids [0, universe).
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe);
    ElementSet(std::size_t universe, std::initializer_list<ElementId> ids);
    ElementSet(std::size_t universe, std::span<const ElementId> ids);

    static ElementSet full(std::size_t universe);

    std::size_t universe() const { return universe_; }
    std::size_t size() const;
    bool empty() const;

    bool contains(ElementId id) const;
    // Returns false when the id was already present. Throws UnknownElement
    // when id >= universe().
    bool insert(ElementId id);
    bool erase(ElementId id);
    void clear();

    // Members in ascending id order.
    std::vector<ElementId> ids() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
                bits &= bits - 1;
            }
        }
    }

    bool is_subset_of(const ElementSet& other) const;

    ElementSet& operator|=(const ElementSet& other);
    ElementSet& operator&=(const ElementSet& other);
    ElementSet& operator-=(const ElementSet& other);

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    std::span<const std::uint64_t> words() const { return words_; }

private:
    void check_same_universe(const ElementSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mixdom
