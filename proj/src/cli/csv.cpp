#include "logparadox/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <system_error>

#include "logparadox/error.hpp"

namespace logparadox::csv {

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    s = s.substr(first, last - first + 1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

std::optional<double> parse_number(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) return std::nullopt;
    double v = 0.0;
    const char* begin = t.data();
    if (*begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) return std::nullopt;
    return v;
}

std::optional<std::size_t> parse_index(const std::string& selector) {
    std::size_t idx = 0;
    const auto [ptr, ec] = std::from_chars(selector.data(), selector.data() + selector.size(), idx);
    if (ec != std::errc{} || ptr != selector.data() + selector.size()) return std::nullopt;
    return idx;
}

} // namespace

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
            field.push_back(c);
        } else if (c == ',' && !quoted) {
            out.push_back(trim(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    out.push_back(trim(field));
    return out;
}

Column read_column(std::istream& in, const std::string& selector) {
    Column col;
    std::optional<std::size_t> index = parse_index(selector);
    bool first = true;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (first) {
            first = false;
            const auto named = std::find(fields.begin(), fields.end(), selector);
            if (named != fields.end()) {
                index = static_cast<std::size_t>(named - fields.begin());
                col.name = selector;
                continue;
            }
            if (!index) {
                throw Error(ErrorCode::InvalidParams, "column '" + selector + "' not found in header");
            }
            if (*index < fields.size() && !parse_number(fields[*index])) {
                col.name = fields[*index];
                continue;
            }
        }
        if (*index >= fields.size()) {
            throw Error(ErrorCode::InvalidParams,
                        "row " + std::to_string(col.values.size()) + " (line " + std::to_string(line_no) +
                            ") has no column " + std::to_string(*index),
                        col.values.size());
        }
        const auto v = parse_number(fields[*index]);
        if (!v) {
            throw Error(ErrorCode::InvalidParams,
                        "row " + std::to_string(col.values.size()) + " (line " + std::to_string(line_no) +
                            ") is not a number: '" + fields[*index] + "'",
                        col.values.size());
        }
        col.values.push_back(*v);
        col.lines.push_back(line_no);
    }
    if (col.name.empty() && index) col.name = std::to_string(*index);
    return col;
}

Column read_column_file(const std::string& path, const std::string& selector) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidParams, "cannot open input file '" + path + "'");
    }
    return read_column(in, selector);
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    if (trim(text).empty()) return out;
    for (const auto& f : split_fields(text)) {
        const auto v = parse_number(f);
        if (!v) {
            throw Error(ErrorCode::InvalidParams, "'" + f + "' is not a number");
        }
        out.push_back(*v);
    }
    return out;
}

std::string format_number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

} // namespace logparadox::csv
