#include "run_case.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace expb {

namespace {

namespace fs = std::filesystem;

std::string format_time_label(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", t);
    return buf;
}

void write_profile_csv(std::ostream& out, const ProblemSpec<double>& ps,
                       const Snapshot<double>& snap, double h) {
    out << "x,numeric,exact,abs_error\n";
    for (Eigen::Index j = 0; j < snap.state.u.size(); ++j) {
        const double x = ps.a + static_cast<double>(j) * h;
        out << format_full(x) << ',' << format_full(snap.state.u[j]) << ',';
        if (ps.exact) {
            const double e = ps.exact(x, snap.t);
            out << format_full(e) << ',' << format_full(std::abs(snap.state.u[j] - e));
        } else {
            out << ',';
        }
        out << '\n';
    }
}

void write_profile_table(std::ostream& out, const ProblemSpec<double>& ps,
                         const Snapshot<double>& snap, double h) {
    char buf[128];
    out << "    x         numeric     exact       abs_error\n";
    for (Eigen::Index j = 0; j < snap.state.u.size(); ++j) {
        const double x = ps.a + static_cast<double>(j) * h;
        if (ps.exact) {
            const double e = ps.exact(x, snap.t);
            std::snprintf(buf, sizeof(buf), "%10.5f  %10.5f  %10.5f  %12.5e\n", x,
                          snap.state.u[j], e, std::abs(snap.state.u[j] - e));
        } else {
            std::snprintf(buf, sizeof(buf), "%10.5f  %10.5f           -             -\n",
                          x, snap.state.u[j]);
        }
        out << buf;
    }
}

}  // namespace

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* to_string(ProblemId id) {
    switch (id) {
        case ProblemId::a: return "a";
        case ProblemId::b: return "b";
        case ProblemId::c: return "c";
        case ProblemId::d: return "d";
        default: return "custom";
    }
}

std::optional<ProblemId> problem_from_string(const std::string& name) {
    if (name == "a") return ProblemId::a;
    if (name == "b") return ProblemId::b;
    if (name == "c") return ProblemId::c;
    if (name == "d") return ProblemId::d;
    if (name == "custom") return ProblemId::custom;
    return std::nullopt;
}

ProblemSpec<double> make_problem(const RunConfig& config) {
    switch (config.problem) {
        case ProblemId::a: return problem_a(config.lambda);
        case ProblemId::b: return problem_b(config.lambda);
        case ProblemId::c: return problem_c(config.lambda, config.wave);
        case ProblemId::d: return problem_d(config.lambda);
        case ProblemId::custom:
            if (!config.custom_spec)
                throw std::invalid_argument("run_case: custom problem needs a ProblemSpec");
            return *config.custom_spec;
    }
    throw std::invalid_argument("run_case: unknown problem");
}

RunResult run_case(const RunConfig& config) {
    const ProblemSpec<double> ps = make_problem(config);
    const Discretization<double> disc{config.n, config.dt, config.p};

    std::vector<double> times = config.snapshot_times;
    double t_end = config.t_end;
    if (times.empty()) {
        if (!(t_end > ps.t_start))
            throw std::invalid_argument("run_case: need snapshot times or t_end");
        times = {t_end};
    }
    std::sort(times.begin(), times.end());
    if (t_end <= 0.0) t_end = times.back();
    if (times.front() < ps.t_start || times.back() > t_end + 1e-12)
        throw std::invalid_argument(
            "run_case: snapshot times must lie in [t_start, t_end]");

    std::vector<Snapshot<double>> snapshots;
    try {
        snapshots = run(ps, disc, times);  // solver_error carries step context
    } catch (const solver_error&) {
        throw;
    } catch (const std::exception& e) {
        // anything thrown before stepping starts is a setup/fit failure
        throw std::runtime_error(std::string("fit: ") + e.what());
    }

    const double h = (ps.b - ps.a) / config.n;
    RunResult result;
    result.snapshots = snapshots;

    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    const bool csv = config.format == OutputFormat::csv;
    const char* ext = csv ? ".csv" : ".txt";

    for (const auto& snap : snapshots) {
        SnapshotSummary summary{snap.t, static_cast<bool>(ps.exact), 0.0, 0.0};
        if (ps.exact) {
            try {
                const auto rep = error_norms<double>(snap.state.u, ps.exact, ps.a, h, snap.t);
                summary.l2 = rep.l2;
                summary.linf = rep.linf;
            } catch (const std::exception& e) {
                throw std::runtime_error(std::string("oracle: ") + e.what());
            }
        }
        result.summaries.push_back(summary);

        const fs::path file =
            fs::path(config.output_dir) /
            (std::string("profile_t") + format_time_label(snap.t) + ext);
        std::ofstream out(file);
        if (!out) throw std::runtime_error("io: cannot write " + file.string());
        try {
            if (csv)
                write_profile_csv(out, ps, snap, h);
            else
                write_profile_table(out, ps, snap, h);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("oracle: ") + e.what());
        }
        result.profile_files.push_back(file.string());
    }

    const fs::path summary_path = fs::path(config.output_dir) / (std::string("summary") + ext);
    std::ofstream out(summary_path);
    if (!out) throw std::runtime_error("io: cannot write " + summary_path.string());
    if (csv) {
        out << "problem,lambda,N,dt,p,t,l2,linf\n";
        for (const auto& s : result.summaries) {
            out << to_string(config.problem) << ',' << format_full(config.lambda) << ','
                << config.n << ',' << format_full(config.dt) << ',' << format_full(config.p)
                << ',' << format_full(s.t) << ',';
            if (s.has_exact)
                out << format_full(s.l2) << ',' << format_full(s.linf);
            else
                out << ',';
            out << '\n';
        }
    } else {
        char buf[160];
        out << "problem  lambda      N      dt          p       t           L2            Linf\n";
        for (const auto& s : result.summaries) {
            if (s.has_exact)
                std::snprintf(buf, sizeof(buf),
                              "%-7s  %-9.4g  %-5d  %-9.4g  %-6.3g  %-9.5g  %-12.5e  %-12.5e\n",
                              to_string(config.problem), config.lambda, config.n, config.dt,
                              config.p, s.t, s.l2, s.linf);
            else
                std::snprintf(buf, sizeof(buf),
                              "%-7s  %-9.4g  %-5d  %-9.4g  %-6.3g  %-9.5g  %-12s  %-12s\n",
                              to_string(config.problem), config.lambda, config.n, config.dt,
                              config.p, s.t, "-", "-");
            out << buf;
        }
    }
    result.summary_file = summary_path.string();
    return result;
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
    std::vector<SweepRow> rows;
    for (double lambda : config.lambdas)
        for (int n : config.ns)
            for (double dt : config.dts)
                for (double p : config.ps)
                    rows.push_back({lambda, n, dt, p, 0.0, false, 0.0, 0.0, {}});
    if (rows.empty()) throw std::invalid_argument("sweep: empty grid");

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            SweepRow& row = rows[i];
            try {
                RunConfig rc;
                rc.problem = config.problem;
                rc.lambda = row.lambda;
                rc.n = row.n;
                rc.dt = row.dt;
                rc.p = row.p;
                rc.wave = config.wave;
                const ProblemSpec<double> ps = make_problem(rc);
                const Discretization<double> disc{row.n, row.dt, row.p};
                const auto snaps = run(ps, disc, {config.t_end});
                row.t = snaps.front().t;
                if (ps.exact) {
                    const double h = (ps.b - ps.a) / row.n;
                    const auto rep =
                        error_norms<double>(snaps.front().state.u, ps.exact, ps.a, h, row.t);
                    row.l2 = rep.l2;
                    row.linf = rep.linf;
                    row.has_norms = true;
                    row.status = "ok";
                } else {
                    row.status = "no-oracle";
                }
            } catch (const std::exception& e) {
                std::string msg = e.what();
                std::replace(msg.begin(), msg.end(), ',', ';');
                row.status = "error: " + msg;
            }
        }
    };

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const SweepConfig& config,
                     std::ostream& out) {
    out << "problem,lambda,N,dt,p,t,l2,linf,status\n";
    for (const auto& row : rows) {
        out << to_string(config.problem) << ',' << format_full(row.lambda) << ',' << row.n
            << ',' << format_full(row.dt) << ',' << format_full(row.p) << ','
            << format_full(row.t) << ',';
        if (row.has_norms)
            out << format_full(row.l2) << ',' << format_full(row.linf);
        else
            out << ',';
        out << ',' << row.status << '\n';
    }
}

}  // namespace expb
