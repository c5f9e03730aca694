#include "qeat/csv.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "qeat/error.hpp"

namespace qeat {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) throw Error(ErrorKind::DimensionMismatch, "CSV header is empty");
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "row has " + std::to_string(cells.size()) +
                                                      " cells, header has " +
                                                      std::to_string(header_.size()));
    }
    rows_.push_back(std::move(cells));
}

void CsvTable::add_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format(v));
    add_row(std::move(cells));
}

std::string CsvTable::format(double value) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 15);
    return std::string(buffer, result.ptr);
}

void CsvTable::write(std::ostream& out) const {
    const auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    line(header_);
    for (const auto& row : rows_) line(row);
}

std::string CsvTable::str() const {
    std::ostringstream s;
    write(s);
    return s.str();
}

}  // namespace qeat
