#include "msaw/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace msaw {

std::string format_number(double x)
{
    char buf[48];
    if (x != 0.0 && std::abs(x) < 1e-3)
        std::snprintf(buf, sizeof buf, "%.12e", x);
    else
        std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_csv(std::ostream& out, const CsvTable& table, const std::vector<std::string>& preamble)
{
    if (table.header.empty())
        throw std::invalid_argument("write_csv: header row is mandatory");
    for (auto& line : preamble)
        out << "# " << line << "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << "\n";
    for (auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw std::invalid_argument("write_csv: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_number(row[i]);
        out << "\n";
    }
}

CsvTable read_csv(std::istream& in)
{
    CsvTable table;
    std::string line;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::stringstream ss(line);
        std::string cell;
        if (!have_header) {
            while (std::getline(ss, cell, ','))
                table.header.push_back(cell);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (...) {
                throw std::runtime_error("read_csv: bad number '" + cell + "' at line " +
                                         std::to_string(lineno));
            }
        }
        if (row.size() != table.header.size())
            throw std::runtime_error("read_csv: row width mismatch at line " + std::to_string(lineno));
        table.rows.push_back(std::move(row));
    }
    if (!have_header)
        throw std::runtime_error("read_csv: missing header row");
    return table;
}

} // namespace msaw
