/**
 * @file table_data.hpp
 * @brief Loader for the reference result tables shipped under data/tables/.
 *
 * Each file holds one published table in long form with per-cell provenance:
 * a (table, row, col, value) record per printed number.
 */

#pragma once

#include <string>
#include <vector>

namespace expb {

struct TableCell {
    std::string table, row, col;
    double value;
};

/// Directory the reference tables were installed from (build-time constant,
/// overridable at the call sites that take an explicit dir).
std::string default_table_dir();

/// Loads data/tables/table_<id>.csv.  Throws std::runtime_error when the
/// file is missing or malformed.
std::vector<TableCell> load_table(const std::string& id,
                                  const std::string& dir = default_table_dir());

/// Finds one cell; throws when absent.
double table_value(const std::vector<TableCell>& cells, const std::string& row,
                   const std::string& col);
}  // namespace expb
