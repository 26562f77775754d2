#include "mixdom/set_file.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "mixdom/errors.hpp"

namespace mixdom {

namespace {

const std::set<std::string, std::less<>> kMetaKeys = {"predicted", "raw_valid", "repaired",
                                                       "optimum",   "proved",    "nodes"};

std::uint32_t parse_number(std::string_view token, std::size_t line) {
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                         std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

ElementSet SetFile::to_element_set() const {
    ElementSet set(std::size_t{kElementKinds} * n);
    for (const Element& e : elements) set.insert(to_id(e, n));
    return set;
}

SetFile SetFile::from_element_set(std::uint32_t n, std::uint32_t k, std::string source, const ElementSet& set) {
    SetFile file;
    file.n = n;
    file.k = k;
    file.source = std::move(source);
    set.for_each([&](ElementId id) { file.elements.push_back(from_id(id, n)); });
    return file;
}

std::string write_set_file(const SetFile& file) {
    std::ostringstream out;
    out << "# mixed dominating set\n";
    out << "n " << file.n << "\nk " << file.k << '\n';
    if (!file.source.empty()) out << "source " << file.source << '\n';
    out << "size " << file.elements.size() << '\n';
    for (const auto& [key, value] : file.meta) out << key << ' ' << value << '\n';
    std::vector<Element> sorted = file.elements;
    std::sort(sorted.begin(), sorted.end(),
              [&](const Element& a, const Element& b) { return to_id(a, file.n) < to_id(b, file.n); });
    for (const Element& e : sorted) out << kind_token(e.kind) << ' ' << e.index << '\n';
    return out.str();
}

SetFile parse_set_file(std::string_view text) {
    SetFile file;
    bool have_n = false;
    bool have_k = false;
    bool in_elements = false;
    std::optional<std::uint32_t> declared_size;
    std::vector<std::pair<std::string_view, std::size_t>> pending;  // element lines, parsed once n is known

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split(line);
        if (tokens.empty()) continue;

        const std::string_view key = tokens[0];
        const bool element_line = key == "id" || parse_kind_token(key).has_value();
        if (element_line) {
            if (tokens.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": expected '<tag> <index>'");
            in_elements = true;
            pending.emplace_back(line, line_no);
            continue;
        }
        if (in_elements)
            throw ParseError("line " + std::to_string(line_no) + ": header key '" + std::string(key) +
                             "' after element lines");
        if (tokens.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected '<key> <value>'");
        const std::string_view value = tokens[1];
        if (key == "n") {
            file.n = parse_number(value, line_no);
            have_n = true;
        } else if (key == "k") {
            file.k = parse_number(value, line_no);
            have_k = true;
        } else if (key == "source") {
            file.source = std::string(value);
        } else if (key == "size") {
            declared_size = parse_number(value, line_no);
        } else if (kMetaKeys.contains(key)) {
            file.meta[std::string(key)] = std::string(value);
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_n || !have_k) throw ParseError("set file must declare n and k");
    if (file.n == 0) throw ParseError("n must be positive");

    std::set<ElementId> seen;
    for (const auto& [line, number] : pending) {
        const auto tokens = split(line);
        const std::uint32_t value = parse_number(tokens[1], number);
        Element e{};
        if (tokens[0] == "id") {
            if (value >= std::uint64_t{kElementKinds} * file.n)
                throw ParseError("line " + std::to_string(number) + ": canonical id out of range");
            e = from_id(value, file.n);
        } else {
            if (value >= file.n)
                throw ParseError("line " + std::to_string(number) + ": index " + std::to_string(value) +
                                 " outside [0, " + std::to_string(file.n) + ")");
            e = {*parse_kind_token(tokens[0]), value};
        }
        if (!seen.insert(to_id(e, file.n)).second)
            throw ParseError("line " + std::to_string(number) + ": duplicate element");
        file.elements.push_back(e);
    }
    std::sort(file.elements.begin(), file.elements.end(),
              [&](const Element& a, const Element& b) { return to_id(a, file.n) < to_id(b, file.n); });
    if (declared_size && *declared_size != file.elements.size())
        throw ParseError("size header says " + std::to_string(*declared_size) + " but " +
                         std::to_string(file.elements.size()) + " elements are listed");
    return file;
}

}  // namespace mixdom
