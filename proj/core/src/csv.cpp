#include "vat/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace vat {

std::string csv_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

void write_line(std::ofstream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out << ',';
        out << cells[i];
    }
    out << '\n';
}

} // namespace

CsvWriter::CsvWriter(const std::filesystem::path& path, std::vector<std::string> columns,
                     std::vector<std::string> units)
    : path_(path), n_columns_(columns.size()), out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open CSV output: " + path.string());
    if (columns.size() != units.size())
        throw std::invalid_argument("CsvWriter: column/unit count mismatch");
    write_line(out_, columns);
    write_line(out_, units);
}

void CsvWriter::write_row(const std::vector<std::string>& cells) {
    if (cells.size() != n_columns_)
        throw std::invalid_argument("CsvWriter: row width mismatch in " + path_.string());
    write_line(out_, cells);
    if (!out_) throw std::runtime_error("CSV write failed: " + path_.string());
}

} // namespace vat
