#include "polybounce/app/output.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace polybounce::app {

namespace {

using ojson = nlohmann::ordered_json;

std::string cell_text(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "";
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

ojson cell_json(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return nullptr;
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return format_number(*d);
        return std::stod(format_number(*d));
    }
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
}

} // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("Table::add_row: column count mismatch");
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(t.columns[i].header());
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cell_text(row[i]));
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& t) {
    ojson doc;
    doc["command"] = t.command;
    ojson cols = ojson::array();
    for (const auto& c : t.columns) cols.push_back({{"name", c.name}, {"method", c.method}, {"unit", c.unit}});
    doc["columns"] = cols;
    ojson rows = ojson::array();
    for (const auto& r : t.rows) {
        ojson row = ojson::array();
        for (const auto& c : r) row.push_back(cell_json(c));
        rows.push_back(row);
    }
    doc["rows"] = rows;
    ojson meta = ojson::object();
    for (const auto& [k, v] : t.meta) meta[k] = cell_json(v);
    doc["meta"] = meta;
    return doc.dump(2) + "\n";
}

std::string render_text(const Table& t) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head;
    for (const auto& c : t.columns) head.push_back(c.header());
    grid.push_back(head);
    for (const auto& r : t.rows) {
        std::vector<std::string> line;
        for (const auto& c : r) line.push_back(cell_text(c));
        grid.push_back(line);
    }
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (const auto& line : grid)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::string out;
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out += "  ";
            out += std::string(width[i] - line[i].size(), ' ') + line[i];
        }
        out += '\n';
    }
    for (const auto& [k, v] : t.meta) out += "# " + k + " = " + cell_text(v) + "\n";
    return out;
}

std::string render(const Table& t, OutputFormat f) {
    switch (f) {
    case OutputFormat::csv: return render_csv(t);
    case OutputFormat::json: return render_json(t);
    case OutputFormat::table: return render_text(t);
    }
    return render_csv(t);
}

} // namespace polybounce::app
