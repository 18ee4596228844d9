// uavnoma: coverage of NOMA-assisted UAV networks, analytic and Monte Carlo.
//
//   uavnoma analytic [--config F] [--strategy S] [--access A]
//   uavnoma mc       [--config F] [--strategy S] [--access A] [--trials N] [--seed U]
//   uavnoma sweep    --config F [--out F] [--trials N] [--seed U]
//   uavnoma validate [--quick]
//
// Exit codes: 0 ok, 1 validation failure, 2 bad configuration or arguments,
// 3 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "uavnoma/config.hpp"
#include "uavnoma/errors.hpp"
#include "uavnoma/parallel.hpp"
#include "uavnoma/sweep.hpp"
#include "uavnoma/validate.hpp"

namespace {

using namespace uavnoma;

struct Overrides {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> strategy;
    std::optional<std::string> access;
};

Experiment load(const Overrides& o) {
    Experiment ex = o.config.empty() ? parse_experiment("{}") : load_experiment(o.config);
    try {
        if (o.strategy) {
            ex.run.strategy = parse_strategy(*o.strategy);
        }
        if (o.access) {
            ex.run.access = parse_access(*o.access);
        }
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (o.trials) {
        if (*o.trials == 0) {
            throw ConfigError("--trials must be positive");
        }
        ex.run.trials = *o.trials;
    }
    if (o.seed) {
        ex.run.seed = *o.seed;
    }
    return ex;
}

void warn_infeasible(const Experiment& ex) {
    const ThresholdSet th = thresholds(ex.link, ex.network, ex.run.strategy, ex.run.access);
    auto say = [](const char* who) {
        std::cerr << "warning: " << who
                  << " decode coefficient is infeasible for this power split and rate; coverage is exactly 0\n";
    };
    if (ex.run.strategy == Strategy::user_centric) {
        if (!th.typical_near) say("typical user (near case)");
        if (!th.typical_far) say("typical user (far case)");
        if (!th.fixed_as_far) say("fixed user (far case)");
        if (!th.fixed_as_near) say("fixed user (near case)");
    } else {
        if (!th.near) say("near user");
        if (!th.far) say("far user");
    }
}

void emit(const std::vector<SweepRow>& rows, const std::string& path) {
    if (path.empty()) {
        write_csv(std::cout, rows);
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw ConfigError(path + ": cannot open for writing");
    }
    write_csv(f, rows);
}

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config, "JSON experiment file");
    cmd->add_option("--strategy", o.strategy, "user-centric or uav-centric");
    cmd->add_option("--access", o.access, "noma or oma");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coverage of NOMA-assisted UAV networks"};
    app.require_subcommand(1);
    Overrides o;
    bool quick = false;

    auto* analytic = app.add_subcommand("analytic", "closed-form coverage of both users at one point");
    add_common(analytic, o);
    analytic->add_option("--out", o.out, "CSV output (default stdout)");

    auto* mc = app.add_subcommand("mc", "Monte Carlo coverage of both users at one point");
    add_common(mc, o);
    mc->add_option("--out", o.out, "CSV output (default stdout)");
    mc->add_option("--trials", o.trials, "number of trials");
    mc->add_option("--seed", o.seed, "64-bit seed");

    auto* sweep = app.add_subcommand("sweep", "run the sweep described by a config and write CSV");
    add_common(sweep, o);
    sweep->get_option("--config")->required();
    sweep->add_option("--out", o.out, "CSV output (default stdout)");
    sweep->add_option("--trials", o.trials, "number of trials per point");
    sweep->add_option("--seed", o.seed, "64-bit seed");

    auto* validate = app.add_subcommand("validate", "run the cross-check suite");
    validate->add_flag("--quick", quick, "small Monte Carlo budgets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            const auto results = run_validation(quick, default_thread_count());
            bool all = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << ": " << r.detail << '\n';
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
        Experiment ex = load(o);
        if (analytic->parsed() || mc->parsed()) {
            ex.run.mode = analytic->parsed() ? RunMode::analytic : RunMode::mc;
            warn_infeasible(ex);
            emit(evaluate_point(ex.network, ex.link, ex.run, default_thread_count()), o.out);
            return 0;
        }
        warn_infeasible(ex);
        emit(run_sweep(ex, default_thread_count()), o.out);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const LimitError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}
