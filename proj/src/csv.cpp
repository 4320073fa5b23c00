#include "gpmix/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gpmix/constants.hpp"
#include "gpmix/errors.hpp"
#include "gpmix/version.hpp"

namespace gpmix::io {

std::string meta_comment_lines(const OutputMeta& meta) {
    std::ostringstream out;
    out << "# gpmix " << kVersion << '\n'
        << "# scenario-hash: " << hash_hex(meta.scenario_hash) << '\n'
        << "# constants-hash: " << constants_hash_hex() << '\n';
    return out.str();
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_csv(std::ostream& out, const Table& table, const OutputMeta& meta) {
    if (table.data.size() != table.columns.size()) {
        throw ConfigError("CSV table has " + std::to_string(table.columns.size()) +
                          " column names but " + std::to_string(table.data.size()) +
                          " data columns");
    }
    const std::size_t rows = table.rows();
    for (std::size_t c = 0; c < table.data.size(); ++c) {
        if (table.data[c].size() != rows) {
            throw ConfigError("CSV table has ragged columns");
        }
    }
    out << meta_comment_lines(meta);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        out << table.columns[c];
    }
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.data.size(); ++c) {
            if (c) out << ',';
            out << format_number(table.data[c][r]);
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const Table& table, const OutputMeta& meta) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + path);
    write_csv(out, table, meta);
}

std::string csv_to_string(const Table& table, const OutputMeta& meta) {
    std::ostringstream out;
    write_csv(out, table, meta);
    return out.str();
}

}  // namespace gpmix::io
