#include "table_data.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace expb {

std::string default_table_dir() {
#ifdef EXPB_TABLE_DIR
    return EXPB_TABLE_DIR;
#else
    return "data/tables";
#endif
}

std::vector<TableCell> load_table(const std::string& id, const std::string& dir) {
    const std::string path = dir + "/table_" + id + ".csv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_table: cannot open " + path);

    std::vector<TableCell> cells;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("table,", 0) == 0) continue;  // header
        std::istringstream ls(line);
        TableCell cell;
        std::string value;
        if (!std::getline(ls, cell.table, ',') || !std::getline(ls, cell.row, ',') ||
            !std::getline(ls, cell.col, ',') || !std::getline(ls, value))
            throw std::runtime_error("load_table: malformed line in " + path + ": " + line);
        cell.value = std::stod(value);
        cells.push_back(std::move(cell));
    }
    if (cells.empty()) throw std::runtime_error("load_table: no cells in " + path);
    return cells;
}

double table_value(const std::vector<TableCell>& cells, const std::string& row,
                   const std::string& col) {
    for (const auto& c : cells)
        if (c.row == row && c.col == col) return c.value;
    throw std::runtime_error("table_value: no cell (" + row + ", " + col + ")");
}

}  // namespace expb
