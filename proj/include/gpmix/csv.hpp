#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gpmix::io {

// Provenance header embedded as `#` comment lines at the top of every output
// artifact: tool version, scenario file hash, constants-table hash.
struct OutputMeta {
    std::uint64_t scenario_hash = 0;
};

std::string meta_comment_lines(const OutputMeta& meta);

// Formats a double with 12 significant digits (shortest form). All CSV
// payload numbers go through this, so output is byte-stable.
std::string format_number(double v);

// Column-oriented numeric table.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data;  // data[c][r]

    std::size_t rows() const { return columns.empty() ? 0 : data.at(0).size(); }
};

void write_csv(std::ostream& out, const Table& table, const OutputMeta& meta);
void write_csv_file(const std::string& path, const Table& table, const OutputMeta& meta);

// Serializes a table to a string (used by the determinism tests, which
// compare byte-identical output across thread counts).
std::string csv_to_string(const Table& table, const OutputMeta& meta);

}  // namespace gpmix::io
