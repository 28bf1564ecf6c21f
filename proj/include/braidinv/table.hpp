#ifndef BRAIDINV_TABLE_HPP
#define BRAIDINV_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

namespace braidinv {

enum class OutputFormat { text, csv, json };

// A rendered result table. Cells are already text: exact rationals as
// canonical "p/q" strings, floats (if any) in columns whose names end in
// "_float", with the precision recorded in float_digits.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::optional<unsigned> float_digits;
    std::vector<std::string> notes;

    void add_row(std::vector<std::string> row);
    friend bool operator==(const Table&, const Table&) = default;
};

std::string render(const std::vector<Table>& tables, OutputFormat format);

// Inverse of render(..., OutputFormat::json). Throws std::invalid_argument.
std::vector<Table> parse_tables_json(const std::string& text);

OutputFormat parse_output_format(const std::string& name);

} // namespace braidinv

#endif // BRAIDINV_TABLE_HPP
