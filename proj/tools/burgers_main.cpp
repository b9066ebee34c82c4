// Command-line driver: configure a Burgers' run, reproduce the published
// benchmark tables, or sweep a parameter grid.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "reproduce.hpp"
#include "run_case.hpp"

namespace {

int do_run(const expb::RunConfig& config) {
    const auto result = expb::run_case(config);
    for (const auto& file : result.profile_files)
        std::printf("wrote %s\n", file.c_str());
    std::printf("wrote %s\n", result.summary_file.c_str());
    for (const auto& s : result.summaries) {
        if (s.has_exact)
            std::printf("t=%-10.6g L2=%-13.6e Linf=%-13.6e\n", s.t, s.l2, s.linf);
        else
            std::printf("t=%-10.6g (no exact solution attached)\n", s.t);
    }
    return 0;
}

int do_reproduce(const std::string& table, const std::string& data_dir,
                 const std::string& out_dir) {
    const auto report = expb::reproduce_table(table, data_dir);
    expb::write_report(report, std::cout);

    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) / ("report_table_" + table + ".txt");
    std::ofstream out(path);
    expb::write_report(report, out);
    std::printf("wrote %s\n", path.string().c_str());

    if (!report.pass) {
        std::fprintf(stderr, "burgers: table %s reproduction FAILED (%d/%d gated cells)\n",
                     table.c_str(), report.gating_passed, report.gating_total);
        return 2;
    }
    return 0;
}

int do_sweep(const expb::SweepConfig& config, const std::string& out_file) {
    const auto rows = expb::sweep(config);
    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("cannot write " + out_file);
    expb::write_sweep_csv(rows, config, out);
    std::size_t failed = 0;
    for (const auto& row : rows)
        if (row.status.rfind("error", 0) == 0) ++failed;
    std::printf("wrote %s (%zu rows, %zu failed)\n", out_file.c_str(), rows.size(), failed);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burgers' equation benchmark: exponential cubic B-spline "
                 "collocation with Crank-Nicolson time stepping"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; command-line flags override it");

    // run ---------------------------------------------------------------
    auto* run_cmd = app.add_subcommand("run", "solve one configured problem");
    expb::RunConfig rc;
    std::string problem_name = "a";
    std::string format_name = "csv";
    run_cmd->add_option("--problem", problem_name, "one of a|b|c|d")
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    run_cmd->add_option("--lambda", rc.lambda, "viscosity")->check(CLI::PositiveNumber);
    run_cmd->add_option("--N", rc.n, "mesh intervals")->check(CLI::Range(4, 1 << 22));
    run_cmd->add_option("--dt", rc.dt, "time step")->check(CLI::PositiveNumber);
    run_cmd->add_option("--p", rc.p, "basis tension")->check(CLI::PositiveNumber);
    run_cmd->add_option("--t-end", rc.t_end, "final time (defaults to last snapshot)");
    run_cmd->add_option("--snapshots", rc.snapshot_times, "comma list of snapshot times")
        ->delimiter(',');
    run_cmd->add_option("--out", rc.output_dir, "output directory");
    run_cmd->add_option("--format", format_name, "csv|table")
        ->check(CLI::IsMember({"csv", "table"}));
    run_cmd->add_option("--wave-alpha", rc.wave.wave_alpha, "problem c front constant");
    run_cmd->add_option("--wave-mu", rc.wave.wave_mu, "problem c speed");
    run_cmd->add_option("--wave-gamma", rc.wave.wave_gamma, "problem c offset");

    // reproduce ----------------------------------------------------------
    auto* rep_cmd = app.add_subcommand("reproduce", "re-run a published table and "
                                                    "check every cell");
    std::string table_id;
    std::string data_dir = expb::default_table_dir();
    std::string report_dir = ".";
    rep_cmd->add_option("table", table_id, "table id")
        ->required()
        ->check(CLI::IsMember(expb::known_tables()));
    rep_cmd->add_option("--data-dir", data_dir, "reference table directory");
    rep_cmd->add_option("--out", report_dir, "report output directory");

    // sweep ----------------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep", "error norms over a parameter grid");
    expb::SweepConfig sc;
    std::string sweep_problem = "d";
    std::string sweep_out = "sweep.csv";
    sweep_cmd->add_option("--problem", sweep_problem, "one of a|b|c|d")
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    sweep_cmd->add_option("--lambda", sc.lambdas, "viscosity list")
        ->delimiter(',')
        ->required();
    sweep_cmd->add_option("--N", sc.ns, "mesh interval list")->delimiter(',')->required();
    sweep_cmd->add_option("--dt", sc.dts, "time step list")->delimiter(',')->required();
    sweep_cmd->add_option("--p", sc.ps, "tension list")->delimiter(',')->required();
    sweep_cmd->add_option("--t-end", sc.t_end, "comparison time")->required();
    sweep_cmd->add_option("--jobs", sc.jobs, "worker threads")->check(CLI::Range(1, 256));
    sweep_cmd->add_option("--out", sweep_out, "output CSV path");
    sweep_cmd->add_option("--wave-alpha", sc.wave.wave_alpha, "problem c front constant");
    sweep_cmd->add_option("--wave-mu", sc.wave.wave_mu, "problem c speed");
    sweep_cmd->add_option("--wave-gamma", sc.wave.wave_gamma, "problem c offset");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            rc.problem = *expb::problem_from_string(problem_name);
            rc.format = format_name == "csv" ? expb::OutputFormat::csv
                                             : expb::OutputFormat::ascii_table;
            return do_run(rc);
        }
        if (rep_cmd->parsed()) return do_reproduce(table_id, data_dir, report_dir);
        if (sweep_cmd->parsed()) {
            sc.problem = *expb::problem_from_string(sweep_problem);
            return do_sweep(sc, sweep_out);
        }
    } catch (const expb::solver_error& e) {
        std::fprintf(stderr, "burgers: error in step %ld: %s\n", e.step, e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "burgers: error: %s\n", e.what());
        return 1;
    }
    return 0;
}
