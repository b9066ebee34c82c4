#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "run_case.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::path("test_cli_tmp") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(EXPB_CLI_PATH) + " " + args +
                            " > test_cli_tmp/cli_stdout.txt 2> test_cli_tmp/cli_stderr.txt";
    fs::create_directories("test_cli_tmp");
    return std::system(cmd.c_str());
}

}  // namespace

TEST_CASE("run_case writes the profile schema and summary") {
    expb::RunConfig rc;
    rc.problem = expb::ProblemId::a;
    rc.lambda = 1.0;
    rc.n = 20;
    rc.dt = 1e-3;
    rc.snapshot_times = {0.1};
    rc.output_dir = fresh_dir("schema").string();

    const auto result = expb::run_case(rc);
    REQUIRE(result.profile_files.size() == 1);
    const std::string profile = slurp(result.profile_files[0]);
    CHECK(profile.rfind("x,numeric,exact,abs_error\n", 0) == 0);
    // 21 nodes + header
    CHECK(std::count(profile.begin(), profile.end(), '\n') == 22);
    CHECK(result.summaries.at(0).has_exact);
    CHECK(result.summaries.at(0).linf < 1e-3);

    const std::string summary = slurp(result.summary_file);
    CHECK(summary.rfind("problem,lambda,N,dt,p,t,l2,linf\n", 0) == 0);
}

TEST_CASE("profiles leave the oracle columns empty when no exact solution") {
    expb::RunConfig rc;
    rc.problem = expb::ProblemId::a;
    rc.lambda = 0.001;  // series oracle not attached below 0.01
    rc.n = 20;
    rc.dt = 1e-3;
    rc.snapshot_times = {0.05};
    rc.output_dir = fresh_dir("nooracle").string();
    const auto result = expb::run_case(rc);
    std::ifstream in(result.profile_files[0]);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(first.substr(first.size() - 2) == ",,");  // trailing empty exact and abs_error
    CHECK(!result.summaries.at(0).has_exact);
}

TEST_CASE("identical configs produce byte-identical outputs") {
    expb::RunConfig rc;
    rc.problem = expb::ProblemId::c;
    rc.lambda = 0.01;
    rc.n = 36;
    rc.dt = 0.01;
    rc.snapshot_times = {0.25, 0.5};
    rc.output_dir = fresh_dir("det_a").string();
    const auto first = expb::run_case(rc);
    rc.output_dir = fresh_dir("det_b").string();
    const auto second = expb::run_case(rc);
    REQUIRE(first.profile_files.size() == second.profile_files.size());
    for (std::size_t i = 0; i < first.profile_files.size(); ++i)
        CHECK(slurp(first.profile_files[i]) == slurp(second.profile_files[i]));
    CHECK(slurp(first.summary_file) == slurp(second.summary_file));
}

TEST_CASE("summary values equal the library-level norms") {
    expb::RunConfig rc;
    rc.problem = expb::ProblemId::d;
    rc.lambda = 0.1;
    rc.n = 16;
    rc.dt = 0.01;
    rc.snapshot_times = {0.5};
    rc.output_dir = fresh_dir("nodrift").string();
    const auto result = expb::run_case(rc);

    const auto ps = expb::make_problem(rc);
    const auto rep = expb::error_norms<double>(result.snapshots[0].state.u, ps.exact,
                                               ps.a, (ps.b - ps.a) / rc.n, 0.5);
    const std::string summary = slurp(result.summary_file);
    CHECK(summary.find(expb::format_full(rep.l2)) != std::string::npos);
    CHECK(summary.find(expb::format_full(rep.linf)) != std::string::npos);
}

TEST_CASE("sweep covers the grid and keeps going on failures") {
    expb::SweepConfig sc;
    sc.problem = expb::ProblemId::d;
    sc.lambdas = {1.0};
    sc.ns = {16, 32};
    sc.dts = {0.01};
    sc.ps = {0.1};
    sc.t_end = 2.25;
    auto rows = expb::sweep(sc);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].status == "ok");
    CHECK(rows[1].status == "ok");
    // halving h drops the error by more than a factor of 2 on this row
    CHECK(rows[0].linf / rows[1].linf > 2.0);

    sc.ps = {1e-3};  // p*h below the tension floor for N=16: recorded, not fatal
    rows = expb::sweep(sc);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].status.rfind("error", 0) == 0);
}

TEST_CASE("sweep rows are identical across worker counts") {
    expb::SweepConfig sc;
    sc.problem = expb::ProblemId::a;
    sc.lambdas = {1.0, 0.1};
    sc.ns = {16, 32};
    sc.dts = {0.005};
    sc.ps = {1.0};
    sc.t_end = 0.1;
    sc.jobs = 1;
    const auto serial = expb::sweep(sc);
    sc.jobs = 4;
    const auto parallel = expb::sweep(sc);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].lambda == parallel[i].lambda);
        CHECK(serial[i].n == parallel[i].n);
        CHECK(serial[i].l2 == parallel[i].l2);
        CHECK(serial[i].linf == parallel[i].linf);
    }
}

TEST_CASE("table-8 sweep grid has 28 rows") {
    expb::SweepConfig sc;
    sc.problem = expb::ProblemId::d;
    sc.lambdas = {1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125, 0.01};
    sc.ns = {16, 32, 64, 128};
    sc.dts = {0.01};
    sc.ps = {0.1};
    sc.t_end = 2.25;
    const auto rows = expb::sweep(sc);
    CHECK(rows.size() == 28);
    std::ostringstream out;
    expb::write_sweep_csv(rows, sc, out);
    const std::string csv = out.str();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 29);
}

TEST_CASE("travelling-wave run shows the two plateaus in its profile") {
    expb::RunConfig rc;
    rc.problem = expb::ProblemId::c;
    rc.lambda = 0.01;
    rc.n = 36;
    rc.dt = 0.001;
    rc.snapshot_times = {0.5};
    rc.output_dir = fresh_dir("plateau").string();
    const auto result = expb::run_case(rc);
    const auto& u = result.snapshots[0].state.u;
    CHECK(std::abs(u[2] - 1.0) < 1e-3);   // left plateau
    CHECK(std::abs(u[34] - 0.2) < 1e-3);  // right plateau
}

TEST_CASE("cli rejects a zero time step with a usage diagnostic") {
    CHECK(run_cli("run --problem a --dt 0 --N 20 --snapshots 0.1") != 0);
    const std::string err = slurp("test_cli_tmp/cli_stderr.txt");
    CHECK(err.find("--dt") != std::string::npos);
}

TEST_CASE("cli run produces files and a clean exit") {
    const auto dir = fresh_dir("cli_run");
    const int rc = run_cli("run --problem a --lambda 1 --N 20 --dt 0.001 "
                           "--snapshots 0.05,0.1 --out " + dir.string());
    CHECK(rc == 0);
    CHECK(fs::exists(dir / "profile_t0.05.csv"));
    CHECK(fs::exists(dir / "profile_t0.1.csv"));
    CHECK(fs::exists(dir / "summary.csv"));
}

TEST_CASE("cli config file supplies values and flags override it") {
    const auto dir = fresh_dir("cli_cfg");
    {
        std::ofstream cfg("test_cli_tmp/case.cfg");
        cfg << "[run]\n"
               "problem=a\n"
               "lambda=1\n"
               "N=20\n"
               "dt=0.001\n"
               "snapshots=0.05\n"
               "out=" << dir.string() << "\n";
    }
    CHECK(run_cli("--config test_cli_tmp/case.cfg run") == 0);
    CHECK(slurp(dir / "summary.csv").find("a,1,20") != std::string::npos);

    // a flag on the command line wins over the file value
    CHECK(run_cli("--config test_cli_tmp/case.cfg run --lambda 0.5") == 0);
    CHECK(slurp(dir / "summary.csv").find("a,0.5,20") != std::string::npos);
}

TEST_CASE("cli run table format rounds for reading") {
    const auto dir = fresh_dir("cli_tbl");
    const int rc = run_cli("run --problem d --lambda 0.1 --N 16 --dt 0.01 "
                           "--snapshots 0.1 --format table --out " + dir.string());
    CHECK(rc == 0);
    const std::string profile = slurp(dir / "profile_t0.1.txt");
    CHECK(profile.find("x         numeric") != std::string::npos);
}

TEST_CASE("cli reproduce writes a report and reflects the verdict") {
    const auto dir = fresh_dir("cli_rep");
    const int rc = run_cli("reproduce 2a --out " + dir.string());
    CHECK(rc == 0);
    const std::string report = slurp(dir / "report_table_2a.txt");
    CHECK(report.find("verdict: PASS") != std::string::npos);
    CHECK(run_cli("reproduce nosuch") != 0);
}
