#ifndef POLYBOUNCE_APP_OUTPUT_HPP
#define POLYBOUNCE_APP_OUTPUT_HPP

#include "polybounce/app/config.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polybounce::app {

// Every column carries the method that produced its values.
struct Column {
    std::string name;
    std::string method;
    std::string unit;

    std::string header() const { return name + ":" + method; }
};

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
    std::string command;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    // Scalar metadata, emitted in JSON only. Values are preformatted.
    std::vector<std::pair<std::string, Cell>> meta;

    void add_row(std::vector<Cell> row);
};

// %.12g, with "nan"/"inf" spelled out.
std::string format_number(double v);

std::string render_csv(const Table& t);
std::string render_json(const Table& t);
std::string render_text(const Table& t);
std::string render(const Table& t, OutputFormat f);

} // namespace polybounce::app

#endif
