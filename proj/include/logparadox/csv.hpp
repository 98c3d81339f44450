#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace logparadox::csv {

/// One numeric column read from a comma-separated file. `rows[i]` is the
/// 1-based file line that produced `values[i]`.
struct Column {
    std::string name;
    std::vector<double> values;
    std::vector<std::size_t> lines;
};

/// Reads the column picked by `selector` (header name or 0-based index). A
/// header row is detected when the first non-empty line does not parse as
/// numbers in the selected column. Blank lines are skipped. Throws
/// logparadox::Error(InvalidParams) naming the offending line.
[[nodiscard]] Column read_column(std::istream& in, const std::string& selector);
[[nodiscard]] Column read_column_file(const std::string& path, const std::string& selector);

/// Comma-separated list of reals ("3,11" or "3, 11").
[[nodiscard]] std::vector<double> parse_list(const std::string& text);

[[nodiscard]] std::vector<std::string> split_fields(const std::string& line);

/// Shortest decimal text that parses back to the same double.
[[nodiscard]] std::string format_number(double v);

} // namespace logparadox::csv
