#include "pdcop/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "pdcop/errors.hpp"

namespace pdcop {
namespace {

std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        const std::string_view cell = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
        const std::size_t first = cell.find_first_not_of(" \t");
        const std::size_t last = cell.find_last_not_of(" \t");
        cells.emplace_back(first == cell.npos ? std::string_view{} : cell.substr(first, last - first + 1));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

}  // namespace

std::optional<std::size_t> Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return std::nullopt;
}

Table read_csv(std::istream& in, bool has_header) {
    Table table;
    std::string line;
    bool first = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<std::string> cells = split_line(line);
        if (first && has_header) {
            table.header = std::move(cells);
        } else {
            const std::size_t width = table.header.empty() ? (table.rows.empty() ? cells.size() : table.rows[0].size())
                                                           : table.header.size();
            if (cells.size() != width) {
                throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                                " cells, found " + std::to_string(cells.size()));
            }
            table.rows.push_back(std::move(cells));
        }
        first = false;
    }
    return table;
}

Table read_csv_file(const std::string& path, bool has_header) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return read_csv(in, has_header);
}

void write_csv(std::ostream& out, const Table& table) {
    auto write_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << row[i];
        }
        out << '\n';
    };
    if (!table.header.empty()) write_row(table.header);
    for (const auto& row : table.rows) write_row(row);
}

std::string format_double(double x) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) throw NumericalError("format_double: conversion failed");
    return std::string(buf, end);
}

double parse_double(std::string_view cell) {
    const std::string_view original = cell;
    const auto first = cell.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        cell = {};
    } else {
        cell = cell.substr(first, cell.find_last_not_of(" \t") - first + 1);
    }
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || end != cell.data() + cell.size() || cell.empty()) {
        throw DataError("not a number: '" + std::string(original) + "'");
    }
    return value;
}

}  // namespace pdcop
