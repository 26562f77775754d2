#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mixdom/cli.hpp"

using mixdom::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("mixdom_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

}  // namespace

TEST_CASE("build") {
    const Result p103 = call({"build", "--n", "10", "--k", "3"});
    CHECK(p103.code == 0);
    CHECK(p103.out.rfind("graph \"P(10,3)\"", 0) == 0);
    CHECK(p103.out.find("u0 -- u3;") != std::string::npos);

    const Result petersen = call({"build", "--n", "5", "--k", "2"});
    CHECK(petersen.code == 0);
    CHECK(petersen.out.find("u4 -- u1;") != std::string::npos);

    CHECK(call({"build", "--n", "4", "--k", "2"}).code == 2);
    CHECK(call({"build", "--n", "5"}).code == 2);

    const Result schema = call({"build", "--n", "6", "--k", "1", "--format", "schema"});
    CHECK(schema.code == 0);
    CHECK(std::count(schema.out.begin(), schema.out.end(), '\n') == 31);  // header plus one line per id
}

TEST_CASE("verify") {
    const std::string block = temp_file("block.txt", "n 8\nk 1\nu 0\nvv 1\nuu 2\nv 4\nuu 5\nvv 6\n");
    const Result ok = call({"verify", "--set", block});
    CHECK(ok.code == 0);
    CHECK(has_line(ok.out, "dominating yes"));
    CHECK(has_line(ok.out, "rd_total 2"));

    const Result empty = call({"verify", "--set", temp_file("empty.txt", "n 8\nk 1\n")});
    CHECK(empty.code == 1);
    CHECK(has_line(empty.out, "dominating no"));
    CHECK(has_line(empty.out, "uncovered 40"));

    CHECK(call({"verify", "--set", temp_file("bad.txt", "n 8\nk 1\nq 3\n")}).code == 2);
    CHECK(call({"verify", "--set", temp_file("range.txt", "n 8\nk 1\nv 9\n")}).code == 2);
    CHECK(call({"verify", "--set", "/nonexistent/mixdom.txt"}).code == 2);
    // header disagrees with the command line
    CHECK(call({"verify", "--set", block, "--n", "9"}).code == 2);
}

TEST_CASE("construct output verifies") {
    for (const auto& [n, k, pattern] : std::vector<std::tuple<std::string, std::string, std::string>>{
             {"8", "1", ""}, {"13", "2", ""}, {"16", "2", "K2_Block8"}, {"27", "4", ""}, {"13", "3", ""}}) {
        std::vector<std::string> args{"construct", "--n", n, "--k", k};
        if (!pattern.empty()) args.insert(args.end(), {"--pattern", pattern});
        const Result c = call(args);
        REQUIRE(c.code == 0);
        const std::string path = temp_file("construct.txt", c.out);
        CHECK(call({"verify", "--set", path}).code == 0);
    }
    CHECK(call({"construct", "--n", "9", "--k", "1", "--pattern", "K2_Block8"}).code == 2);
    CHECK(call({"construct", "--n", "9", "--k", "1", "--pattern", "Bogus"}).code == 2);
    CHECK(call({"construct", "--n", "6", "--k", "1"}).code == 2);
    const Result dot = call({"construct", "--n", "8", "--k", "1", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("penwidth=4") != std::string::npos);
    // the repaired odd remainder reports its repair on stderr
    CHECK(call({"construct", "--n", "13", "--k", "3"}).err.find("note:") != std::string::npos);
}

TEST_CASE("solve") {
    const Result s = call({"solve", "--n", "9", "--k", "2"});
    CHECK(s.code == 0);
    CHECK(has_line(s.out, "optimum 7"));
    CHECK(has_line(s.out, "proved 1"));
    CHECK(call({"verify", "--set", temp_file("solve.txt", s.out)}).code == 0);

    const Result ex = call({"solve", "--n", "6", "--k", "1", "--exhaustive", "--max-size", "6"});
    CHECK(ex.code == 0);
    CHECK(has_line(ex.out, "optimum 5"));
    CHECK(call({"solve", "--n", "6", "--k", "1", "--exhaustive", "--max-size", "4"}).code == 1);

    CHECK(call({"solve", "--n", "20", "--k", "1", "--max-nodes", "10"}).code == 3);
    CHECK(call({"solve", "--n", "20", "--k", "1", "--max-nodes", "0"}).code == 2);
}

TEST_CASE("formula") {
    const Result f = call({"formula", "--n", "11", "--k", "1"});
    CHECK(f.code == 0);
    CHECK(has_line(f.out, "value 9"));
    CHECK(has_line(f.out, "kind Exact"));
    const Result r = call({"formula", "--n", "16", "--k", "2", "--pattern", "K2_Block8"});
    CHECK(has_line(r.out, "value 12"));
    CHECK(has_line(r.out, "kind UpperBound"));
    CHECK(has_line(call({"formula", "--n", "27", "--k", "4"}).out, "value 21"));
    CHECK(call({"formula", "--n", "8", "--k", "4"}).code == 2);
}

TEST_CASE("compare") {
    const Result c = call({"compare", "--k", "1", "--n-min", "8", "--n-max", "12", "--format", "tsv"});
    CHECK(c.code == 0);
    std::istringstream in(c.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n\tk\tconstruction\traw_valid\tformula\tkind\tcase\texact\tproved\tgap\tformula_gap\tnodes");
    int rows = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> cols;
        std::istringstream fields(line);
        for (std::string col; std::getline(fields, col, '\t');) cols.push_back(col);
        REQUIRE(cols.size() == 12);
        CHECK(cols[8] == "yes");
        CHECK(cols[9] == "0");
        CHECK(cols[10] == "0");
        ++rows;
    }
    CHECK(rows == 5);
    CHECK(call({"compare", "--k", "1", "--n-min", "12", "--n-max", "8"}).code == 2);
}

TEST_CASE("table") {
    const Result t1 = call({"table", "table1"});
    CHECK(t1.code == 0);
    CHECK(t1.out.find("MISMATCH") == std::string::npos);
    const Result eq1 = call({"table", "eq1", "--n-min", "8", "--n-max", "30"});
    CHECK(eq1.code == 0);
    CHECK(std::count(eq1.out.begin(), eq1.out.end(), '\n') == 24);
    const Result k2 = call({"table", "k2", "--n-min", "5", "--n-max", "12", "--solve"});
    CHECK(k2.code == 0);
    CHECK(k2.out.find("MISMATCH") == std::string::npos);
    CHECK(call({"table", "nosuch"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}
