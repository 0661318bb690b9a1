#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace msaw {

/// Numeric formatting for CSV output: '.' decimal separator, exponent
/// notation for nonzero |x| < 1e-3.
std::string format_number(double x);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Header row plus newline-terminated data rows. Optional '#'-prefixed
/// preamble lines go first (provenance: seeds, parameters).
void write_csv(std::ostream& out, const CsvTable& table,
               const std::vector<std::string>& preamble = {});

/// Reads a CSV produced by write_csv ('#' lines skipped, header required).
CsvTable read_csv(std::istream& in);

} // namespace msaw
