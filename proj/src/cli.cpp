#include "mixdom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mixdom/compare.hpp"
#include "mixdom/constructions.hpp"
#include "mixdom/domination.hpp"
#include "mixdom/errors.hpp"
#include "mixdom/exact_solver.hpp"
#include "mixdom/formulas.hpp"
#include "mixdom/petersen_graph.hpp"
#include "mixdom/set_file.hpp"

namespace mixdom::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ParseError("cannot write '" + out_path + "'");
    file << text;
}

std::string labels(const Graph& graph, const ElementSet& set) {
    std::string s;
    set.for_each([&](ElementId id) {
        if (!s.empty()) s += ' ';
        s += label(graph.element(id), graph.n(), graph.k());
    });
    return s;
}

// Unset limits keep the defaults; an explicit zero is rejected by the solver.
SolveBudget make_budget(std::optional<double> max_time, std::optional<std::uint64_t> max_nodes,
                        std::optional<int> hint) {
    SolveBudget b;
    if (max_time) b.max_time = std::chrono::duration<double>(*max_time);
    if (max_nodes) b.max_nodes = *max_nodes;
    b.upper_bound_hint = hint;
    return b;
}

// A rendered table: header, rows, and whether any row disagrees with the
// value it is checked against.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool mismatch = false;

    std::string render(bool tsv) const {
        std::ostringstream out;
        if (tsv) {
            for (const auto* row : all())
                for (std::size_t i = 0; i < row->size(); ++i) out << (i ? "\t" : "") << (*row)[i] << (i + 1 == row->size() ? "\n" : "");
            return out.str();
        }
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto* row : all())
            for (std::size_t i = 0; i < row->size(); ++i) width[i] = std::max(width[i], (*row)[i].size());
        for (const auto* row : all()) {
            for (std::size_t i = 0; i < row->size(); ++i)
                out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << (*row)[i];
            out << '\n';
        }
        return out.str();
    }

private:
    std::vector<const std::vector<std::string>*> all() const {
        std::vector<const std::vector<std::string>*> v{&header};
        for (const auto& r : rows) v.push_back(&r);
        return v;
    }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string status(bool ok) { return ok ? "ok" : "MISMATCH"; }

struct TableOptions {
    std::string name;
    std::optional<std::uint32_t> n_min;
    std::optional<std::uint32_t> n_max;
    std::uint32_t k = 3;
    bool solve = false;
    std::optional<double> max_time;
};

Table build_table(const TableOptions& opt) {
    Table t;
    const auto range = [&](std::uint32_t lo, std::uint32_t hi) {
        return std::pair{opt.n_min.value_or(lo), opt.n_max.value_or(hi)};
    };
    const SolveBudget budget = make_budget(opt.max_time, std::nullopt, std::nullopt);

    if (opt.name == "table1") {
        t.header = {"n", "stated", "exact", "exhaustive", "status"};
        const auto [lo, hi] = range(3, 7);
        for (std::uint32_t n = std::max(lo, 3U); n <= std::min(hi, 7U); ++n) {
            const Graph g = build_graph({n, 1});
            const long stated = gamma_k1(n).value;
            const OptimalResult exact = solve_exact(g, budget);
            const OptimalResult brute = solve_exhaustive(g, 8);
            const bool ok = exact.proved && exact.optimum == stated && brute.optimum == stated;
            t.mismatch |= !ok;
            t.rows.push_back({std::to_string(n), std::to_string(stated),
                              exact.proved ? std::to_string(exact.optimum) : "?", std::to_string(brute.optimum),
                              status(ok)});
        }
    } else if (opt.name == "eq1" || opt.name == "k2") {
        const bool k1 = opt.name == "eq1";
        t.header = {"n", "case", "formula", "construction", "dominating"};
        if (opt.solve) t.header.push_back("exact");
        t.header.push_back("status");
        const auto [lo, hi] = k1 ? range(8, 15) : range(5, 12);
        for (std::uint32_t n = lo; n <= hi; ++n) {
            const Graph g = build_graph({n, k1 ? 1U : 2U});
            const FormulaResult f = k1 ? gamma_k1(n) : gamma_k2(n);
            const ConstructionOutput c = k1 ? construct_k1(g) : construct_k2_block4(g);
            const bool dominating = verify(g, c.set).is_dominating;
            bool ok = dominating && c.raw_valid && static_cast<long>(c.set.size()) == f.value;
            std::vector<std::string> row{std::to_string(n), f.source, std::to_string(f.value),
                                         std::to_string(c.set.size()), yes_no(dominating)};
            if (opt.solve) {
                const OptimalResult r = solve_exact(g, budget);
                ok = ok && (!r.proved || r.optimum == f.value);
                row.push_back(r.proved ? std::to_string(r.optimum) : "?");
            }
            row.push_back(status(ok));
            t.mismatch |= !ok;
            t.rows.push_back(std::move(row));
        }
    } else if (opt.name == "k2remark") {
        t.header = {"n", "r", "remark", "k2", "difference", "construction", "dominating", "status"};
        const auto [lo, hi] = range(8, 23);
        for (std::uint32_t n = std::max(lo, 8U); n <= hi; ++n) {
            const Graph g = build_graph({n, 2});
            const long remark = gamma_k2_remark(n).value;
            const long exact = gamma_k2(n).value;
            const ConstructionOutput c = construct_k2_block8(g);
            const bool dominating = verify(g, c.set).is_dominating;
            const long expected_diff = (n % 8 == 1 || n % 8 == 4) ? 1 : 0;
            const bool ok = dominating && remark - exact == expected_diff &&
                            static_cast<long>(c.set.size()) == remark;
            t.mismatch |= !ok;
            t.rows.push_back({std::to_string(n), std::to_string(n % 8), std::to_string(remark),
                              std::to_string(exact), std::to_string(remark - exact), std::to_string(c.set.size()),
                              yes_no(dominating), status(ok)});
        }
    } else if (opt.name == "general") {
        t.header = {"n", "k", "case", "bound", "construction", "raw_valid", "repaired"};
        if (opt.solve) t.header.push_back("exact");
        t.header.push_back("status");
        const std::uint32_t k = opt.k;
        const auto [lo, hi] = range(2 * k + 1, 2 * k + 1 + 3 * (4 * (k / 2) + 1));
        for (std::uint32_t n = std::max(lo, 2 * k + 1); n <= hi; ++n) {
            const Graph g = build_graph({n, k});
            const FormulaResult f = upper_bound_general(n, k);
            const ConstructionOutput c = construct_general(g);
            bool ok = verify(g, c.set).is_dominating && static_cast<long>(c.set.size()) <= f.value;
            std::vector<std::string> row{std::to_string(n), std::to_string(k), f.source, std::to_string(f.value),
                                         std::to_string(c.set.size()), yes_no(c.raw_valid), yes_no(c.repaired)};
            if (opt.solve) {
                const OptimalResult r = solve_exact(g, budget);
                ok = ok && (!r.proved || r.optimum <= f.value);
                row.push_back(r.proved ? std::to_string(r.optimum) : "?");
            }
            row.push_back(status(ok));
            t.mismatch |= !ok;
            t.rows.push_back(std::move(row));
        }
    } else {
        throw ParseError("unknown table '" + opt.name + "' (table1, eq1, k2, k2remark, general)");
    }
    return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mixed domination in generalized Petersen graphs P(n,k)", "mixdom"};
    app.require_subcommand(1);

    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::string format;
    std::string set_path;
    std::string out_path;
    std::string pattern_name_arg;
    std::optional<double> max_time;
    std::optional<std::uint64_t> max_nodes;
    std::optional<int> hint;
    bool exhaustive = false;
    int max_size = 8;
    std::uint32_t n_min = 0;
    std::uint32_t n_max = 0;
    TableOptions table_opt;

    const auto add_nk = [&](CLI::App* cmd, bool required) {
        auto* on = cmd->add_option("--n", n, "outer cycle length");
        auto* ok = cmd->add_option("--k", k, "inner skip");
        if (required) {
            on->required();
            ok->required();
        }
    };

    auto* build = app.add_subcommand("build", "render P(n,k) as DOT or list its element universe");
    add_nk(build, true);
    build->add_option("--format", format, "dot | schema")->default_val("dot")->check(CLI::IsMember({"dot", "schema"}));
    build->add_option("--set", set_path, "set file whose elements are drawn bold");

    auto* verify_cmd = app.add_subcommand("verify", "check that a set file is a mixed dominating set");
    add_nk(verify_cmd, false);
    verify_cmd->add_option("--set", set_path, "set file")->required();

    auto* construct_cmd = app.add_subcommand("construct", "emit a block-pattern construction");
    add_nk(construct_cmd, true);
    construct_cmd->add_option("--pattern", pattern_name_arg, "K1_Block8 | K2_Block4 | K2_Block8 | General");
    construct_cmd->add_option("--format", format, "set | dot")->default_val("set")->check(CLI::IsMember({"set", "dot"}));
    construct_cmd->add_option("--out", out_path, "write output here instead of stdout");

    auto* solve_cmd = app.add_subcommand("solve", "compute gamma_md exactly");
    add_nk(solve_cmd, true);
    solve_cmd->add_option("--max-time", max_time, "time limit in seconds");
    solve_cmd->add_option("--max-nodes", max_nodes, "search node limit");
    solve_cmd->add_option("--hint", hint, "claimed upper bound on the optimum");
    solve_cmd->add_flag("--exhaustive", exhaustive, "enumerate subsets by size instead of branch and bound");
    solve_cmd->add_option("--max-size", max_size, "largest subset size for --exhaustive")->default_val(8);
    solve_cmd->add_option("--out", out_path, "write the witness set file here instead of stdout");

    auto* formula_cmd = app.add_subcommand("formula", "evaluate the closed-form value or bound");
    add_nk(formula_cmd, true);
    formula_cmd->add_option("--pattern", pattern_name_arg, "K2_Block8 selects the alternate k=2 formula");

    auto* compare_cmd = app.add_subcommand("compare", "construction vs formula vs exact optimum over a range of n");
    compare_cmd->add_option("--k", k, "inner skip")->required();
    compare_cmd->add_option("--n-min", n_min, "first n")->required();
    compare_cmd->add_option("--n-max", n_max, "last n")->required();
    compare_cmd->add_option("--max-time", max_time, "time limit per instance in seconds");
    compare_cmd->add_option("--max-nodes", max_nodes, "node limit per instance");
    compare_cmd->add_option("--format", format, "text | tsv")->default_val("text")->check(CLI::IsMember({"text", "tsv"}));

    auto* table_cmd = app.add_subcommand("table", "print a table of known values next to constructions");
    table_cmd->add_option("name", table_opt.name, "table1 | eq1 | k2 | k2remark | general")->required();
    table_cmd->add_option("--n-min", table_opt.n_min, "first n");
    table_cmd->add_option("--n-max", table_opt.n_max, "last n");
    table_cmd->add_option("--k", table_opt.k, "inner skip for the general table")->default_val(3);
    table_cmd->add_flag("--solve", table_opt.solve, "add an exact-optimum column");
    table_cmd->add_option("--max-time", table_opt.max_time, "time limit per solve in seconds");
    table_cmd->add_option("--format", format, "text | tsv")->default_val("text")->check(CLI::IsMember({"text", "tsv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (build->parsed()) {
            const Graph g = build_graph({n, k});
            if (format == "schema") {
                out << to_schema(g);
                return kExitOk;
            }
            if (set_path.empty()) {
                out << to_dot(g);
            } else {
                const SetFile file = parse_set_file(read_file(set_path));
                if (file.n != n || file.k != k) throw ParseError("set file is for a different graph");
                const ElementSet s = file.to_element_set();
                out << to_dot(g, &s);
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            const SetFile file = parse_set_file(read_file(set_path));
            if ((n != 0 && n != file.n) || (k != 0 && k != file.k))
                throw ParseError("set file declares P(" + std::to_string(file.n) + "," + std::to_string(file.k) +
                                 "), command line asks for P(" + std::to_string(n) + "," + std::to_string(k) + ")");
            const Graph g = build_graph({file.n, file.k});
            const ElementSet s = file.to_element_set();
            const DominationReport report = verify(g, s);
            out << "n " << g.n() << "\nk " << g.k() << '\n';
            out << "dominating " << yes_no(report.is_dominating) << '\n';
            out << "size " << s.size() << '\n';
            out << "rd_total " << report.rd_total << '\n';
            out << "uncovered " << report.uncovered.size() << '\n';
            if (!report.uncovered.empty()) out << "uncovered_elements " << labels(g, report.uncovered) << '\n';
            return report.is_dominating ? kExitOk : kExitNotDominating;
        }

        if (construct_cmd->parsed()) {
            const Graph g = build_graph({n, k});
            Pattern pattern = default_pattern(k);
            if (!pattern_name_arg.empty()) {
                const auto p = parse_pattern(pattern_name_arg);
                if (!p) throw ParseError("unknown pattern '" + pattern_name_arg + "'");
                pattern = *p;
            }
            const ConstructionOutput c = construct(pattern, g);
            for (const std::string& line : c.log) err << "note: " << line << '\n';
            if (format == "dot") {
                emit(to_dot(g, &c.set), out_path, out);
                return kExitOk;
            }
            SetFile file = SetFile::from_element_set(n, k, std::string(pattern_name(pattern)), c.set);
            file.meta["predicted"] = std::to_string(c.predicted_size);
            file.meta["raw_valid"] = c.raw_valid ? "1" : "0";
            file.meta["repaired"] = c.repaired ? "1" : "0";
            emit(write_set_file(file), out_path, out);
            return kExitOk;
        }

        if (solve_cmd->parsed()) {
            const Graph g = build_graph({n, k});
            OptimalResult r;
            if (exhaustive) {
                r = solve_exhaustive(g, max_size);
            } else {
                r = solve_exact(g, make_budget(max_time, max_nodes, hint));
            }
            SetFile file = SetFile::from_element_set(n, k, exhaustive ? "solve_exhaustive" : "solve_exact", r.witness);
            file.meta["optimum"] = std::to_string(r.optimum);
            file.meta["proved"] = r.proved ? "1" : "0";
            file.meta["nodes"] = std::to_string(r.nodes_explored);
            emit(write_set_file(file), out_path, out);
            err << "optimum " << r.optimum << (r.proved ? " (proved)" : " (unproved upper bound)") << " in "
                << std::fixed << std::setprecision(3) << r.elapsed.count() << " s\n";
            return r.proved ? kExitOk : kExitUnproved;
        }

        if (formula_cmd->parsed()) {
            validate({n, k});
            FormulaResult f;
            if (pattern_name_arg == "K2_Block8") {
                if (k != 2) throw OutOfRange("K2_Block8 formula needs k = 2");
                f = gamma_k2_remark(n);
            } else if (!pattern_name_arg.empty() && !parse_pattern(pattern_name_arg)) {
                throw ParseError("unknown pattern '" + pattern_name_arg + "'");
            } else {
                f = formula_for(n, k);
            }
            out << "value " << f.value << "\nkind " << kind_name(f.kind) << "\ncase " << f.source << '\n';
            return kExitOk;
        }

        if (compare_cmd->parsed()) {
            if (n_min > n_max) throw ParseError("--n-min exceeds --n-max");
            const SolveBudget budget = make_budget(max_time, max_nodes, std::nullopt);
            std::vector<CompareRow> rows;
            for (std::uint32_t m = n_min; m <= n_max; ++m) {
                if (2 * k >= m) continue;  // P(m,k) undefined
                rows.push_back(compare_instance(m, k, budget));
            }
            out << (format == "tsv" ? render_compare_tsv(rows) : render_compare_text(rows));
            const bool contradiction = std::any_of(rows.begin(), rows.end(), [](const CompareRow& r) { return r.contradicts_formula(); });
            const bool unproved = std::any_of(rows.begin(), rows.end(), [](const CompareRow& r) { return !r.proved; });
            if (contradiction) return kExitNotDominating;
            return unproved ? kExitUnproved : kExitOk;
        }

        if (table_cmd->parsed()) {
            const Table t = build_table(table_opt);
            out << t.render(format == "tsv");
            return t.mismatch ? kExitNotDominating : kExitOk;
        }
    } catch (const InvalidSpec& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const OutOfRange& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const NoSolutionWithin& e) {
        err << "error: " << e.what() << '\n';
        return kExitNotDominating;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace mixdom::cli
