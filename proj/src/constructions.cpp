#include "mixdom/constructions.hpp"

#include <array>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "mixdom/domination.hpp"
#include "mixdom/errors.hpp"
#include "mixdom/formulas.hpp"

namespace mixdom {

namespace {

using K = ElementKind;

// Collects pattern elements with indices reduced mod n. Duplicates are
// dropped and logged.
class PatternBuilder {
public:
    explicit PatternBuilder(const Graph& graph) : graph_(graph), set_(graph.empty_set()) {}

    void add(K kind, long index) {
        const long n = graph_.n();
        const auto i = static_cast<std::uint32_t>(((index % n) + n) % n);
        const Element e{kind, i};
        if (!set_.insert(graph_.id(e))) {
            duplicates_ = true;
            log_.push_back("dropped duplicate " + label(e, graph_.n(), graph_.k()));
        }
    }

    const ElementSet& set() const { return set_; }
    bool had_duplicates() const { return duplicates_; }
    std::vector<std::string>& log() { return log_; }

private:
    const Graph& graph_;
    ElementSet set_;
    bool duplicates_ = false;
    std::vector<std::string> log_;
};

std::string describe(const Graph& graph, const ElementSet& set) {
    std::string out = "{";
    bool first = true;
    set.for_each([&](ElementId id) {
        out += first ? "" : ", ";
        out += label(graph.element(id), graph.n(), graph.k());
        first = false;
    });
    return out + "}";
}

// Validates the raw pattern; when it does not dominate, applies `correction`
// (if any) and then greedy completion, logging every change.
ConstructionOutput finish(const Graph& graph, Pattern pattern, long predicted, PatternBuilder& raw,
                          const std::function<std::optional<ElementSet>()>& correction = {}) {
    ConstructionOutput out;
    out.pattern = pattern;
    out.predicted_size = predicted;
    out.set = raw.set();
    out.repair_added = graph.empty_set();
    out.repair_removed = graph.empty_set();
    out.log = std::move(raw.log());

    const bool dominating = verify(graph, out.set).is_dominating;
    out.raw_valid = dominating && !raw.had_duplicates();
    if (dominating) return out;

    out.log.push_back("raw pattern does not dominate: uncovered " +
                      describe(graph, verify(graph, out.set).uncovered));
    if (correction) {
        if (auto fixed = correction(); fixed && verify(graph, *fixed).is_dominating) {
            const ElementSet removed = out.set - *fixed;
            const ElementSet added = *fixed - out.set;
            out.log.push_back("table correction: removed " + describe(graph, removed) + ", added " +
                              describe(graph, added));
            out.repair_removed |= removed;
            out.repair_added |= added;
            out.set = std::move(*fixed);
            out.repaired = true;
            return out;
        }
    }
    const ElementSet completed = greedy_complete(graph, out.set);
    const ElementSet added = completed - out.set;
    out.log.push_back("greedy completion: added " + describe(graph, added));
    out.repair_added |= added;
    out.set = completed;
    out.repaired = true;
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw OutOfRange(message);
}

// Remainder sets for the k = 2 block-8 pattern, as (family, offset from 8m).
struct Offset {
    K kind;
    int offset;
};

constexpr Offset kTail1[] = {{K::OuterVertex, -2}, {K::Spoke, 0}};
constexpr Offset kTail2[] = {{K::InnerVertex, 0}, {K::Spoke, 1}};
constexpr Offset kTail3[] = {{K::OuterVertex, 1}, {K::InnerVertex, 0}, {K::Spoke, 2}};
constexpr Offset kTail4[] = {{K::OuterVertex, -2}, {K::OuterVertex, 1}, {K::Spoke, 3}, {K::InnerEdge, 0}};
constexpr Offset kTail5[] = {{K::InnerVertex, 0}, {K::InnerVertex, 3}, {K::OuterEdge, 1}, {K::Spoke, 4}};
constexpr Offset kTail6[] = {{K::OuterVertex, 3}, {K::InnerVertex, 0}, {K::Spoke, 1}, {K::Spoke, 5},
                             {K::InnerEdge, 2}};
constexpr Offset kTail7[] = {{K::InnerVertex, 0}, {K::OuterEdge, 1}, {K::InnerVertex, 3},
                             {K::Spoke, 4},       {K::OuterEdge, 5}, {K::InnerVertex, 6}};

std::span<const Offset> block8_k2_tail(long r) {
    switch (r) {
    case 1: return kTail1;
    case 2: return kTail2;
    case 3: return kTail3;
    case 4: return kTail4;
    case 5: return kTail5;
    case 6: return kTail6;
    case 7: return kTail7;
    default: return {};
    }
}

// Block-(4k'+1) pattern for k >= 3. With `corrected` set, the two odd-r
// remainder rows use the indices that make the pattern dominate.
ElementSet general_pattern(const Graph& graph, bool corrected, PatternBuilder& b) {
    const long n = graph.n();
    const long half = graph.k() / 2;
    const long period = 4 * half + 1;
    const long m = n / period;
    const long r = n % period;
    const bool even_k = graph.k() % 2 == 0;

    for (long j = 0; j < m; ++j) {
        const long base = period * j;
        if (even_k) {
            for (long i = 0; i < half; ++i) {
                b.add(K::InnerVertex, base + 2 * i);
                b.add(K::Spoke, base + 2 * i + 1);
                b.add(K::OuterEdge, base + 2 * half + 2 * i);
            }
            b.add(K::Spoke, base + 4 * half);
        } else {
            for (long i = 0; i < half; ++i) {
                b.add(K::InnerVertex, base + 2 * i + 1);
                b.add(K::Spoke, base + 2 * i + 2);
                b.add(K::OuterEdge, base + 2 * half + 2 * i + 1);
            }
            b.add(K::Spoke, base);
        }
    }
    if (r == 0) return b.set();

    const long base = period * m;
    // Pairs (u, spoke) laid out like the full blocks: u at even offsets for
    // even k, odd offsets for odd k.
    const long u_shift = even_k ? 0 : 1;
    const long s_shift = even_k ? 1 : 0;
    const auto pairs = [&](long count) {
        for (long i = 0; i < count; ++i) {
            b.add(K::InnerVertex, base + 2 * i + u_shift);
            b.add(K::Spoke, base + 2 * i + s_shift);
        }
    };

    if (r % 2 == 0) {
        pairs(r / 2);
    } else if (r <= 2 * half) {
        pairs((r - 1) / 2);
        b.add(K::Spoke, base + r - 1);
        const long back = corrected ? (2 * half - r + 1) / 2 : (2 * half - r - 1) / 2;
        for (long i = 0; i < back; ++i) b.add(K::InnerVertex, base - 2 * i - 2);
    } else if (even_k) {
        pairs(half);
        for (long i = 0; i < (r - 2 * half + 1) / 2; ++i) b.add(K::OuterEdge, base + 2 * half + 2 * i);
    } else {
        for (long i = 0; i < half; ++i) {
            b.add(K::InnerVertex, base + 2 * i + (corrected ? 1 : 2));
            b.add(K::Spoke, base + 2 * i + (corrected ? 2 : 1));
        }
        b.add(K::Spoke, base);
        for (long i = 0; i < (r - 2 * half - 1) / 2; ++i) b.add(K::OuterEdge, base + 2 * half + 2 * i + 1);
    }
    return b.set();
}

}  // namespace

std::string_view pattern_name(Pattern pattern) {
    switch (pattern) {
    case Pattern::K1_Block8: return "K1_Block8";
    case Pattern::K2_Block4: return "K2_Block4";
    case Pattern::K2_Block8: return "K2_Block8";
    case Pattern::General: return "General";
    }
    return "?";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
    for (Pattern p : {Pattern::K1_Block8, Pattern::K2_Block4, Pattern::K2_Block8, Pattern::General})
        if (pattern_name(p) == name) return p;
    return std::nullopt;
}

Pattern default_pattern(std::uint32_t k) {
    if (k == 1) return Pattern::K1_Block8;
    if (k == 2) return Pattern::K2_Block4;
    return Pattern::General;
}

ConstructionOutput construct_k1(const Graph& graph) {
    const long n = graph.n();
    require(graph.k() == 1 && n >= 8, "K1_Block8 needs k = 1 and n >= 8");
    const long m = n / 8;
    const long r = n % 8;

    PatternBuilder b(graph);
    for (long i = 0; i < m; ++i) {
        const long base = 8 * i;
        b.add(K::InnerVertex, base);
        b.add(K::OuterEdge, base + 1);
        b.add(K::InnerEdge, base + 2);
        b.add(K::OuterVertex, base + 4);
        b.add(K::InnerEdge, base + 5);
        b.add(K::OuterEdge, base + 6);
    }

    const long base = 8 * m;
    if (r >= 1) b.add(K::InnerVertex, base);
    switch (r) {
    case 1: b.add(K::OuterEdge, base); break;      // v_{8m} v_0
    case 2: b.add(K::OuterEdge, base + 1); break;  // v_{8m+1} v_0
    case 3:
        b.add(K::OuterEdge, base + 1);
        b.add(K::InnerEdge, base + 1);
        break;
    case 4:
        b.add(K::OuterEdge, base + 1);
        b.add(K::InnerEdge, base + 2);
        b.add(K::OuterVertex, base + 3);
        break;
    case 5:
    case 6:
    case 7:
        b.add(K::OuterEdge, base + 1);
        b.add(K::InnerEdge, base + 2);
        b.add(K::OuterVertex, base + 4);
        if (r == 6) b.add(K::Spoke, base + 5);
        if (r == 7) {
            b.add(K::InnerEdge, base + 5);
            b.add(K::OuterEdge, base + 6);  // v_{8m+6} v_0
        }
        break;
    default: break;
    }
    return finish(graph, Pattern::K1_Block8, gamma_k1(n).value, b);
}

ConstructionOutput construct_k2_block4(const Graph& graph) {
    const long n = graph.n();
    require(graph.k() == 2 && n >= 5, "K2_Block4 needs k = 2 and n >= 5");
    const long m = n / 4;
    const long r = n % 4;

    PatternBuilder b(graph);
    for (long i = 0; i < m; ++i) {
        b.add(K::Spoke, 4 * i);
        b.add(K::InnerEdge, 4 * i + 1);  // u_{4i+1} u_{4i+3}
        b.add(K::OuterVertex, 4 * i + 2);
    }
    for (long j = 0; j < r; ++j) b.add(K::Spoke, 4 * m + j);
    return finish(graph, Pattern::K2_Block4, gamma_k2(n).value, b);
}

ConstructionOutput construct_k2_block8(const Graph& graph) {
    const long n = graph.n();
    require(graph.k() == 2 && n >= 8, "K2_Block8 needs k = 2 and n >= 8");
    const long m = n / 8;
    const long r = n % 8;

    PatternBuilder b(graph);
    for (long i = 0; i < m; ++i) {
        const long base = 8 * i;
        b.add(K::InnerVertex, base);
        b.add(K::OuterEdge, base + 1);
        b.add(K::InnerVertex, base + 3);
        b.add(K::Spoke, base + 4);
        b.add(K::OuterEdge, base + 5);
        b.add(K::Spoke, base + 7);
    }
    for (const Offset& o : block8_k2_tail(r)) b.add(o.kind, 8 * m + o.offset);

    auto out = finish(graph, Pattern::K2_Block8, gamma_k2_remark(n).value, b);
    out.known_suboptimal = r == 1 || r == 4;
    return out;
}

ConstructionOutput construct_general(const Graph& graph) {
    const long n = graph.n();
    const long k = graph.k();
    const long period = 4 * (k / 2) + 1;
    require(k >= 3 && n >= period, "General pattern needs k >= 3 and n >= 4*floor(k/2)+1");

    PatternBuilder raw(graph);
    general_pattern(graph, false, raw);
    const auto correction = [&graph]() -> std::optional<ElementSet> {
        PatternBuilder fixed(graph);
        general_pattern(graph, true, fixed);
        if (fixed.had_duplicates()) return std::nullopt;
        return fixed.set();
    };
    return finish(graph, Pattern::General, upper_bound_general(n, k).value, raw, correction);
}

ConstructionOutput construct_k1(std::uint32_t n) {
    require(n >= 8, "K1_Block8 needs n >= 8, got " + std::to_string(n));
    return construct_k1(build_graph({n, 1}));
}

ConstructionOutput construct_k2_block4(std::uint32_t n) {
    require(n >= 5, "K2_Block4 needs n >= 5, got " + std::to_string(n));
    return construct_k2_block4(build_graph({n, 2}));
}

ConstructionOutput construct_k2_block8(std::uint32_t n) {
    require(n >= 8, "K2_Block8 needs n >= 8, got " + std::to_string(n));
    return construct_k2_block8(build_graph({n, 2}));
}

ConstructionOutput construct_general(std::uint32_t n, std::uint32_t k) {
    if (k < 3) throw OutOfRange("General pattern needs k >= 3");
    if (2 * k >= n) throw OutOfRange("General pattern needs k < n/2");
    return construct_general(build_graph({n, k}));
}

ConstructionOutput construct(Pattern pattern, const Graph& graph) {
    switch (pattern) {
    case Pattern::K1_Block8: return construct_k1(graph);
    case Pattern::K2_Block4: return construct_k2_block4(graph);
    case Pattern::K2_Block8: return construct_k2_block8(graph);
    case Pattern::General: return construct_general(graph);
    }
    throw OutOfRange("unknown pattern");
}

}  // namespace mixdom
