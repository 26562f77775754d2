#include "mixdom/compare.hpp"

#include <iomanip>
#include <sstream>

#include "mixdom/errors.hpp"
#include "mixdom/petersen_graph.hpp"

namespace mixdom {

namespace {

template <typename T>
std::string or_dash(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

std::vector<std::string> cells(const CompareRow& r) {
    return {std::to_string(r.n),
            std::to_string(r.k),
            or_dash(r.construction_size),
            r.construction_size ? (r.construction_raw_valid ? "yes" : "no") : "-",
            std::to_string(r.formula_value),
            std::string(kind_name(r.formula_kind)),
            r.formula_source,
            or_dash(r.exact_optimum),
            r.proved ? "yes" : "no",
            or_dash(r.gap()),
            or_dash(r.formula_gap()),
            std::to_string(r.nodes)};
}

const std::vector<std::string> kHeader = {"n",    "k",     "construction", "raw_valid",   "formula", "kind",
                                          "case", "exact", "proved",       "gap",         "formula_gap", "nodes"};

}  // namespace

std::optional<long> CompareRow::gap() const {
    if (!construction_size || !exact_optimum) return std::nullopt;
    return *construction_size - *exact_optimum;
}

std::optional<long> CompareRow::formula_gap() const {
    if (!exact_optimum) return std::nullopt;
    return formula_value - *exact_optimum;
}

bool CompareRow::contradicts_formula() const {
    if (!proved || !exact_optimum) return false;
    if (formula_kind == FormulaKind::Exact) return *exact_optimum != formula_value;
    return *exact_optimum > formula_value;
}

CompareRow compare_instance(std::uint32_t n, std::uint32_t k, const SolveBudget& budget) {
    const Graph graph = build_graph({n, k});
    CompareRow row;
    row.n = n;
    row.k = k;
    try {
        const ConstructionOutput c = construct(default_pattern(k), graph);
        row.construction_size = static_cast<long>(c.set.size());
        row.construction_raw_valid = c.raw_valid;
    } catch (const OutOfRange&) {
    }
    const FormulaResult f = formula_for(n, k);
    row.formula_value = f.value;
    row.formula_kind = f.kind;
    row.formula_source = f.source;

    const OptimalResult opt = solve_exact(graph, budget);
    row.proved = opt.proved;
    row.nodes = opt.nodes_explored;
    if (opt.proved) row.exact_optimum = opt.optimum;
    return row;
}

std::string render_compare_tsv(const std::vector<CompareRow>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < kHeader.size(); ++i) out << (i ? "\t" : "") << kHeader[i];
    out << '\n';
    for (const CompareRow& r : rows) {
        const auto c = cells(r);
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "\t" : "") << c[i];
        out << '\n';
    }
    return out.str();
}

std::string render_compare_text(const std::vector<CompareRow>& rows) {
    std::vector<std::vector<std::string>> table{kHeader};
    for (const CompareRow& r : rows) table.push_back(cells(r));
    std::vector<std::size_t> width(kHeader.size(), 0);
    for (const auto& row : table)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

    std::ostringstream out;
    for (const auto& row : table) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace mixdom
