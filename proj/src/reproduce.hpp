/**
 * @file reproduce.hpp
 * @brief Re-runs the published benchmark tables and checks every cell
 *        against the shipped reference data.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "table_data.hpp"

namespace expb {

struct CellCheck {
    std::string row, col;
    double reference = 0.0;
    double actual = 0.0;
    double tol = 0.0;      ///< absolute tolerance; 0 marks a factor-style gate
    bool gating = true;    ///< counts toward the table verdict
    bool excluded = false; ///< flagged source cell, listed but never gated
    bool pass = true;
    std::string note;
};

struct TableReport {
    std::string id;
    std::string params;  ///< the run parameters used
    std::vector<CellCheck> cells;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<std::string> notes;
    int gating_total = 0;
    int gating_passed = 0;
    bool pass = false;
};

/// Known table ids: 2a 2b 2c 3a 3b 4 5 6 7 8.
bool is_known_table(const std::string& id);
std::vector<std::string> known_tables();

/// Runs the table's parameter set and compares cell by cell.
TableReport reproduce_table(const std::string& id,
                            const std::string& data_dir = default_table_dir());

/// Human-readable report: header, one line per cell, notes, verdict.
void write_report(const TableReport& report, std::ostream& out);

}  // namespace expb
