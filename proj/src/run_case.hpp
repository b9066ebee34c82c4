/**
 * @file run_case.hpp
 * @brief Benchmark-facing drivers: one configured run with profile/summary
 *        files, and a parameter sweep aggregating error norms.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expb/problem.hpp"
#include "expb/solver.hpp"

namespace expb {

enum class ProblemId { a, b, c, d, custom };

enum class OutputFormat { csv, ascii_table };

const char* to_string(ProblemId id);
std::optional<ProblemId> problem_from_string(const std::string& name);

/// One fully specified benchmark run.
struct RunConfig {
    ProblemId problem = ProblemId::a;
    double lambda = 1.0;
    int n = 40;                          ///< mesh intervals
    double dt = 1e-4;
    double p = 1.0;                      ///< basis tension
    double t_end = 0.0;                  ///< 0 means "last snapshot time"
    std::vector<double> snapshot_times;  ///< empty means {t_end}
    std::string output_dir = ".";
    OutputFormat format = OutputFormat::csv;
    WaveParams<double> wave{0.4, 0.6, 0.125};           ///< problem (c) only
    std::optional<ProblemSpec<double>> custom_spec;     ///< problem == custom
};

struct SnapshotSummary {
    double t;
    bool has_exact;
    double l2, linf;  ///< meaningful only when has_exact
};

struct RunResult {
    std::vector<std::string> profile_files;
    std::string summary_file;
    std::vector<SnapshotSummary> summaries;
    std::vector<Snapshot<double>> snapshots;
};

/// Builds the ProblemSpec selected by the config.
ProblemSpec<double> make_problem(const RunConfig& config);

/// Runs the march and writes one profile file per snapshot plus a summary
/// file.  Throws with a message naming the failing stage (fit, step k,
/// oracle, io).
RunResult run_case(const RunConfig& config);

/// Cross-product sweep over (lambda, N, dt, p).
struct SweepConfig {
    ProblemId problem = ProblemId::d;
    std::vector<double> lambdas;
    std::vector<int> ns;
    std::vector<double> dts;
    std::vector<double> ps;
    double t_end = 1.0;
    WaveParams<double> wave{0.4, 0.6, 0.125};
    int jobs = 1;
};

struct SweepRow {
    double lambda;
    int n;
    double dt;
    double p;
    double t = 0.0;
    bool has_norms = false;
    double l2 = 0.0, linf = 0.0;
    std::string status;  ///< "ok", "no-oracle", or the failure message
};

/// Runs every grid combination; failures are recorded per row and the sweep
/// continues.  Rows keep grid order regardless of worker count.
std::vector<SweepRow> sweep(const SweepConfig& config);

void write_sweep_csv(const std::vector<SweepRow>& rows, const SweepConfig& config,
                     std::ostream& out);

/// Round-trip-safe float formatting used in all CSV output.
std::string format_full(double v);

}  // namespace expb
