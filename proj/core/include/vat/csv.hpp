#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace vat {

/// Full-precision decimal rendering of a double (17 significant digits);
/// round-trips bit-exactly through strtod.
std::string csv_double(double value);

/// Fixed-schema CSV: first line column names, second line units, then data
/// rows. All writes go through one serial owner, so byte output is
/// independent of how the rows were computed.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, std::vector<std::string> columns,
              std::vector<std::string> units);

    void write_row(const std::vector<std::string>& cells);

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::size_t n_columns_;
    std::ofstream out_;
};

} // namespace vat
