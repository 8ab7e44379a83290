// Copyright 2026 The adjsup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// adjsup command-line front end. Talks to the simulator only through the C API.

#include <CLI11.hpp>
#include <adjsup/adjsup.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "record.hpp"

namespace {

using adjsup_cli::Format;
using adjsup_cli::RunRecord;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct ParamsDeleter {
    void operator()(adjsup_params *p) const { adjsup_params_destroy(p); }
};
struct ResultDeleter {
    void operator()(adjsup_result *r) const { adjsup_result_destroy(r); }
};
struct McDeleter {
    void operator()(adjsup_mc *m) const { adjsup_mc_destroy(m); }
};
struct ValidationDeleter {
    void operator()(adjsup_validation *v) const { adjsup_validation_destroy(v); }
};
using ParamsPtr = std::unique_ptr<adjsup_params, ParamsDeleter>;
using ResultPtr = std::unique_ptr<adjsup_result, ResultDeleter>;

/// Raised for any C API failure; carries the process exit code.
struct CommandError : std::runtime_error {
    CommandError(int code, const std::string &what) : std::runtime_error(what), exit_code(code) {}
    int exit_code;
};

void check(adjsup_status status, const std::string &context) {
    if (status == ADJSUP_OK) {
        return;
    }
    std::string msg = context + ": " + adjsup_status_string(status);
    if (*adjsup_last_error() != '\0') {
        msg += " (" + std::string(adjsup_last_error()) + ")";
    }
    throw CommandError(status == ADJSUP_ERR_CONFIG ? kExitUsage : kExitValidation, msg);
}

struct Point {
    std::uint32_t n_qubits;
    double p;
    std::uint32_t k;
    std::uint32_t marked;
};

ParamsPtr make_params(const Point &pt) {
    adjsup_params *raw = nullptr;
    check(adjsup_params_create(pt.n_qubits, pt.p, pt.k, pt.marked, &raw), "invalid parameters");
    return ParamsPtr(raw);
}

RunRecord make_record(const Point &pt, const adjsup_result *result) {
    adjsup_analytic_point a{};
    check(adjsup_analytic(pt.n_qubits, pt.p, pt.k, &a), "analytic evaluation");
    RunRecord r{};
    r.n_qubits = pt.n_qubits;
    r.p = pt.p;
    r.k = pt.k;
    r.marked = pt.marked;
    r.epsilon_analytic = a.epsilon;
    r.log10_epsilon = a.log_epsilon / std::numbers::ln10;
    r.zeta = a.zeta;
    r.expected_runs = a.expected_runs;
    double v = 0.0;
    check(adjsup_result_survival(result, &v), "survival");
    r.survival_sim = v;
    if (adjsup_result_error_rate(result, &v) == ADJSUP_OK) {
        r.epsilon_sim = v;
    }
    return r;
}

/// Runs every point, verifies each against the closed forms and returns the
/// records in grid order. Sets `all_verified` false if any row deviates.
std::vector<RunRecord> run_grid(const std::vector<Point> &grid, std::uint32_t threads, bool &all_verified) {
    std::vector<ParamsPtr> owned;
    std::vector<const adjsup_params *> handles;
    for (const Point &pt : grid) {
        owned.push_back(make_params(pt));
        handles.push_back(owned.back().get());
    }
    std::vector<adjsup_result *> raw(grid.size(), nullptr);
    std::vector<adjsup_status> statuses(grid.size(), ADJSUP_OK);
    check(adjsup_sweep(handles.data(), handles.size(), threads, raw.data(), statuses.data()), "sweep");
    std::vector<ResultPtr> results;
    for (adjsup_result *r : raw) {
        results.emplace_back(r);
    }

    all_verified = true;
    std::vector<RunRecord> records;
    records.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        check(statuses[i], "grid point " + std::to_string(i));
        adjsup_verify_report report{};
        check(adjsup_verify_against_analytic(results[i].get(), &report), "verify");
        if (!report.passed) {
            all_verified = false;
            std::cerr << "verify failed at N=" << grid[i].n_qubits << " p=" << grid[i].p << " k=" << grid[i].k
                      << ": error rel dev " << report.error_rel_dev << ", survival rel dev "
                      << report.survival_rel_dev << "\n";
        }
        records.push_back(make_record(grid[i], results[i].get()));
    }
    return records;
}

void write_output(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw CommandError(kExitUsage, "cannot open output file " + path);
    }
    out << text;
}

struct OutputFlags {
    std::string format = "csv";
    std::string out;

    Format parsed() const { return format == "json" ? Format::Json : Format::Csv; }
};

void add_output_flags(CLI::App *cmd, OutputFlags &flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", flags.out, "Output path (default: standard output)");
}

struct GridFlags {
    std::string n_qubits;
    std::string p;
    std::string k;
    std::uint32_t marked = 1;
    std::uint32_t threads = 0;
};

/// Grid order is N, p, k (k fastest), or p, k, N when `n_fastest`.
std::vector<Point> cartesian(const GridFlags &flags, bool n_fastest) {
    auto ns = adjsup_cli::parse_int_list(flags.n_qubits);
    auto ps = adjsup_cli::parse_double_list(flags.p);
    auto ks = adjsup_cli::parse_int_list(flags.k);
    std::vector<Point> grid;
    if (n_fastest) {
        for (double p : ps)
            for (auto k : ks)
                for (auto n : ns) grid.push_back({n, p, k, flags.marked});
    } else {
        for (auto n : ns)
            for (double p : ps)
                for (auto k : ks) grid.push_back({n, p, k, flags.marked});
    }
    return grid;
}

void add_grid_flags(CLI::App *cmd, GridFlags &flags, bool required) {
    auto *n = cmd->add_option("--n-qubits", flags.n_qubits, "Register widths, e.g. 1-4 or 2,3");
    auto *p = cmd->add_option("--p", flags.p, "Depolarization probabilities, comma separated");
    auto *k = cmd->add_option("--k", flags.k, "Total applications, e.g. 1-30");
    if (required) {
        n->required();
        p->required();
        k->required();
    } else {
        n->capture_default_str();
        p->capture_default_str();
        k->capture_default_str();
    }
    cmd->add_option("--marked", flags.marked, "Marked answer label y")->capture_default_str();
    cmd->add_option("--threads", flags.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

int emit_grid(const std::vector<Point> &grid, const GridFlags &flags, const OutputFlags &out) {
    bool verified = true;
    auto records = run_grid(grid, flags.threads, verified);
    write_output(adjsup_cli::render(records, out.parsed(), true), out.out);
    return verified ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Adjoint-cycle error suppression under depolarizing noise"};
    app.require_subcommand(1);

    // run / mc
    struct {
        std::uint32_t n_qubits = 0;
        double p = 0.0;
        std::uint32_t k = 0;
        std::uint32_t marked = 1;
        std::uint64_t trials = 1000000;
        std::uint64_t seed = 42;
        std::uint32_t threads = 0;
    } single;
    OutputFlags single_out;
    auto add_single = [&](CLI::App *cmd) {
        cmd->add_option("--n-qubits", single.n_qubits, "Register width N")->required();
        cmd->add_option("--p", single.p, "Depolarization probability")->required();
        cmd->add_option("--k", single.k, "Total applications (forward + adjoints)")->required();
        cmd->add_option("--marked", single.marked, "Marked answer label y")->capture_default_str();
        add_output_flags(cmd, single_out);
    };
    auto *run_cmd = app.add_subcommand("run", "Simulate one configuration");
    add_single(run_cmd);
    auto *mc_cmd = app.add_subcommand("mc", "Monte Carlo trajectory estimate for one configuration");
    add_single(mc_cmd);
    mc_cmd->add_option("--trials", single.trials, "Number of trajectories")->capture_default_str();
    mc_cmd->add_option("--seed", single.seed, "64-bit seed")->capture_default_str();
    mc_cmd->add_option("--threads", single.threads, "Worker threads (0 = all cores)")->capture_default_str();

    GridFlags sweep_flags;
    OutputFlags sweep_out;
    auto *sweep_cmd = app.add_subcommand("sweep", "Simulate a Cartesian grid of configurations");
    add_grid_flags(sweep_cmd, sweep_flags, true);
    add_output_flags(sweep_cmd, sweep_out);

    GridFlags fig3{"2", "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9", "1-30"};
    GridFlags fig4{"1-12", "0.5", "1,2,3,5"};
    GridFlags fig5{"4", "0.05,0.1,0.2,0.5", "1-10"};
    OutputFlags fig_out;
    auto *fig3_cmd = app.add_subcommand("fig3", "Error rate versus k at N=2 for several p");
    auto *fig4_cmd = app.add_subcommand("fig4", "Error rate versus register width N");
    auto *fig5_cmd = app.add_subcommand("fig5", "Expected whole-scheme runs versus error rate");
    for (auto [cmd, flags] : {std::pair{fig3_cmd, &fig3}, std::pair{fig4_cmd, &fig4}, std::pair{fig5_cmd, &fig5}}) {
        add_grid_flags(cmd, *flags, false);
        add_output_flags(cmd, fig_out);
    }

    adjsup_validate_options vopts;
    adjsup_validate_options_init(&vopts);
    bool inject_fault = false;
    auto *validate_cmd = app.add_subcommand("validate", "Cross-check simulation, dense oracle and Monte Carlo");
    validate_cmd->add_option("--max-n", vopts.max_n, "Largest N for the dense-oracle grid")->capture_default_str();
    validate_cmd->add_option("--mc-trials", vopts.mc_trials, "Trials per Monte Carlo spot check")->capture_default_str();
    validate_cmd->add_option("--seed", vopts.mc_seed, "Monte Carlo seed")->capture_default_str();
    // Negative control for the test suite; hidden from help.
    validate_cmd->add_flag("--inject-fault", inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run_cmd || *mc_cmd) {
            Point pt{single.n_qubits, single.p, single.k, single.marked};
            ParamsPtr params = make_params(pt);
            adjsup_result *raw = nullptr;
            check(adjsup_run_scheme(params.get(), &raw), "run");
            ResultPtr result(raw);
            RunRecord record = make_record(pt, result.get());
            if (*mc_cmd) {
                adjsup_mc *mc_raw = nullptr;
                check(adjsup_mc_estimate(params.get(), single.trials, single.seed, single.threads, &mc_raw), "mc");
                std::unique_ptr<adjsup_mc, McDeleter> mc(mc_raw);
                adjsup_mc_summary s{};
                check(adjsup_mc_get_summary(mc.get(), &s), "mc summary");
                record.mc = adjsup_cli::McColumns{
                    s.survival_freq, s.has_error_freq ? std::optional<double>(s.error_freq) : std::nullopt,
                    s.trials, s.seed};
            }
            write_output(adjsup_cli::render({record}, single_out.parsed(), false), single_out.out);
            return kExitOk;
        }
        if (*sweep_cmd) {
            return emit_grid(cartesian(sweep_flags, false), sweep_flags, sweep_out);
        }
        if (*fig3_cmd) {
            return emit_grid(cartesian(fig3, false), fig3, fig_out);
        }
        if (*fig4_cmd) {
            return emit_grid(cartesian(fig4, true), fig4, fig_out);
        }
        if (*fig5_cmd) {
            return emit_grid(cartesian(fig5, false), fig5, fig_out);
        }
        if (*validate_cmd) {
            vopts.inject_fault = inject_fault ? 1 : 0;
            adjsup_validation *raw = nullptr;
            check(adjsup_validate(&vopts, &raw), "validate");
            std::unique_ptr<adjsup_validation, ValidationDeleter> v(raw);
            std::fputs(adjsup_validation_text(v.get()), stdout);
            return adjsup_validation_passed(v.get()) ? kExitOk : kExitValidation;
        }
    } catch (const adjsup_cli::UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CommandError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code;
    }
    return kExitUsage;
}
