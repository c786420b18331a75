#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifs_cli {

// Rectangular CSV table: header row plus string cells, comma-separated,
// LF line endings.  Numeric cells are formatted once at insertion with six
// significant digits, so emit/parse round-trips byte for byte.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

inline std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string csv_emit(const CsvTable& table) {
    std::string out;
    const auto join = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out.push_back(',');
            out += cells[i];
        }
        out.push_back('\n');
    };
    join(table.header);
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw std::invalid_argument("csv_emit: ragged row");
        join(row);
    }
    return out;
}

inline CsvTable csv_parse(const std::string& text) {
    CsvTable table;
    std::vector<std::string> row;
    std::string cell;
    bool first_line = true;
    for (char ch : text) {
        if (ch == ',') {
            row.push_back(cell);
            cell.clear();
        } else if (ch == '\n') {
            row.push_back(cell);
            cell.clear();
            if (first_line) {
                table.header = row;
                first_line = false;
            } else {
                if (row.size() != table.header.size())
                    throw std::invalid_argument("csv_parse: ragged row");
                table.rows.push_back(row);
            }
            row.clear();
        } else {
            cell.push_back(ch);
        }
    }
    if (!cell.empty() || !row.empty())
        throw std::invalid_argument("csv_parse: missing trailing newline");
    return table;
}

}  // namespace ifs_cli
