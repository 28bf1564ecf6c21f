#include <braidinv/table.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidinv {

using ordered_json = nlohmann::ordered_json;

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table '" + name + "': row has " + std::to_string(row.size()) +
                               " cells, expected " + std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

namespace {

void render_text(std::ostream& out, const Table& t) {
    out << "== " << t.name;
    if (t.float_digits) out << " (floats: " << *t.float_digits << " digits)";
    out << " ==\n";
    std::vector<std::size_t> widths(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        widths[c] = t.columns[c].size();
        for (const auto& row : t.rows) widths[c] = std::max(widths[c], row[c].size());
    }
    const auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) line += "  ";
            line += cells[c];
            if (c + 1 < cells.size()) line.append(widths[c] - cells[c].size(), ' ');
        }
        out << line << '\n';
    };
    emit(t.columns);
    for (const auto& row : t.rows) emit(row);
    for (const auto& note : t.notes) out << "# " << note << '\n';
}

std::string csv_cell(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char ch : cell) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

void render_csv(std::ostream& out, const Table& t) {
    out << "# table: " << t.name << '\n';
    if (t.float_digits) out << "# float_digits: " << *t.float_digits << '\n';
    const auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out << ',';
            out << csv_cell(cells[c]);
        }
        out << '\n';
    };
    emit(t.columns);
    for (const auto& row : t.rows) emit(row);
    for (const auto& note : t.notes) out << "# " << note << '\n';
}

ordered_json to_json(const Table& t) {
    ordered_json j;
    j["name"] = t.name;
    j["columns"] = t.columns;
    j["float_digits"] = t.float_digits ? ordered_json(*t.float_digits) : ordered_json(nullptr);
    j["rows"] = t.rows;
    j["notes"] = t.notes;
    return j;
}

} // namespace

std::string render(const std::vector<Table>& tables, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::text:
            for (std::size_t i = 0; i < tables.size(); ++i) {
                if (i > 0) out << '\n';
                render_text(out, tables[i]);
            }
            break;
        case OutputFormat::csv:
            for (std::size_t i = 0; i < tables.size(); ++i) {
                if (i > 0) out << '\n';
                render_csv(out, tables[i]);
            }
            break;
        case OutputFormat::json: {
            ordered_json doc;
            doc["tables"] = ordered_json::array();
            for (const auto& t : tables) doc["tables"].push_back(to_json(t));
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

std::vector<Table> parse_tables_json(const std::string& text) {
    try {
        const auto doc = ordered_json::parse(text);
        std::vector<Table> tables;
        for (const auto& j : doc.at("tables")) {
            Table t;
            t.name = j.at("name").get<std::string>();
            t.columns = j.at("columns").get<std::vector<std::string>>();
            if (!j.at("float_digits").is_null()) t.float_digits = j.at("float_digits").get<unsigned>();
            for (const auto& row : j.at("rows")) t.add_row(row.get<std::vector<std::string>>());
            t.notes = j.at("notes").get<std::vector<std::string>>();
            tables.push_back(std::move(t));
        }
        return tables;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("table JSON: ") + e.what());
    }
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

} // namespace braidinv
