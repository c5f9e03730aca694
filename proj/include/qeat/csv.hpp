#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qeat {

/// Header plus rows of preformatted cells. Numbers use '.' and 15 significant digits
/// regardless of locale.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    /// Throws DimensionMismatch if the arity differs from the header.
    void add_row(std::vector<std::string> cells);
    void add_row(const std::vector<double>& values);

    const std::vector<std::string>& header() const noexcept { return header_; }
    const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

    void write(std::ostream& out) const;
    std::string str() const;

    static std::string format(double value);

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace qeat
