#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdcop {

/// A comma-separated table of raw string cells. No quoting: the tool's own files never need it.
struct Table {
    std::vector<std::string> header;  ///< empty when read without a header
    std::vector<std::vector<std::string>> rows;

    /// Index of a header column; nullopt if absent.
    std::optional<std::size_t> column(std::string_view name) const;
};

/// Throws DataError on a ragged row.
Table read_csv(std::istream& in, bool has_header = true);
Table read_csv_file(const std::string& path, bool has_header = true);

void write_csv(std::ostream& out, const Table& table);

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

/// Whole-cell parse; DataError naming the cell on failure.
double parse_double(std::string_view cell);

}  // namespace pdcop
