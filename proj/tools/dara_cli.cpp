// Command-line front end: allocate, sweep, oracle, fit.
//
// Exit codes: 0 success, 2 config error, 3 infeasible instance,
// 4 exhaustive-search guard exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dara/error.hpp"
#include "dara/experiment.hpp"
#include "dara/weights.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitGuard = 4;

int exit_code_for(dara::ErrorCode code) {
    switch (code) {
        case dara::ErrorCode::InfeasibleDelta:
        case dara::ErrorCode::InfeasibleTarget:
            return kExitInfeasible;
        case dara::ErrorCode::InstanceTooLarge:
            return kExitGuard;
        default:
            return kExitConfig;
    }
}

nlohmann::json row_to_json(const dara::ResultRow& row) {
    nlohmann::json j;
    j["policy"] = std::string(dara::to_string(row.policy));
    j["allocation"] = row.allocation.slots;
    j["r_target"] = row.r_target;
    j["r_achieved"] = row.r_achieved;
    j["Q"] = row.Q;
    j["W"] = row.W;
    j["gap"] = row.gap;
    j["gap_bound"] = row.gap_bound ? nlohmann::json(*row.gap_bound) : nlohmann::json(nullptr);
    return j;
}

int cmd_allocate(const std::string& config_path) {
    const auto config = dara::load_experiment_config(config_path);
    const auto rows = dara::run_scenario(config);
    const auto rab = dara::build_rab(config);

    nlohmann::json out;
    out["scenario"] = config.scenario;
    out["N"] = config.N;
    out["T"] = config.T;
    out["seed"] = config.seed;
    out["objective"] = std::string(dara::to_string(config.objective));
    out["budget"] = dara::scenario_budget(config, rab);
    std::vector<double> h;
    for (const auto& s : rab.sensors()) h.push_back(s.h);
    out["h"] = h;
    out["results"] = nlohmann::json::array();
    for (const auto& row : rows) out["results"].push_back(row_to_json(row));
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& axis_name, const std::vector<double>& values,
              int repetitions, const std::string& out_path, const std::string& aggregate_path, bool serial) {
    const auto config = dara::load_experiment_config(config_path);
    const dara::SweepAxis axis{dara::axis_from_string(axis_name), values};
    const auto result = serial ? dara::sweep_serial(config, axis, repetitions) : dara::sweep(config, axis, repetitions);

    if (out_path.empty()) {
        dara::write_csv(std::cout, result.rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw dara::Error(dara::ErrorCode::ConfigError, "cannot write " + out_path);
        dara::write_csv(out, result.rows);
    }
    if (!aggregate_path.empty()) {
        std::ofstream agg(aggregate_path);
        if (!agg) throw dara::Error(dara::ErrorCode::ConfigError, "cannot write " + aggregate_path);
        dara::write_aggregate_csv(agg, result.aggregates);
    }
    return 0;
}

int cmd_oracle(const std::string& config_path) {
    const auto config = dara::load_experiment_config(config_path);
    const auto rab = dara::build_rab(config);
    const auto best = dara::optimal_exhaustive(rab, config.objective);
    nlohmann::json out;
    out["N"] = config.N;
    out["T"] = config.T;
    out["objective"] = std::string(dara::to_string(config.objective));
    out["allocation"] = best.allocation.slots;
    out["value"] = best.value;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_fit(const std::string& histogram_path) {
    const auto profile = dara::profile_from_histogram(dara::read_histogram_csv(histogram_path));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", dara::fit_exponential(profile));
    std::cout << buf << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delay-aware TDMA slot allocation"};
    app.require_subcommand(1);

    std::string config_path;
    auto* allocate = app.add_subcommand("allocate", "Run the configured policies on one block, JSON to stdout");
    allocate->add_option("-c,--config", config_path, "Experiment config (JSON)")->required();

    std::string axis = "N";
    std::vector<double> values;
    int repetitions = 1;
    std::string out_path;
    std::string aggregate_path;
    bool serial = false;
    auto* sweep = app.add_subcommand("sweep", "Sweep one axis, CSV to stdout or --out");
    sweep->add_option("-c,--config", config_path, "Experiment config (JSON)")->required();
    sweep->add_option("--axis", axis, "N, delta or T")->check(CLI::IsMember({"N", "delta", "T"}));
    sweep->add_option("--values", values, "Comma-separated axis values")->delimiter(',')->required();
    sweep->add_option("--repetitions", repetitions, "Repetitions per axis value")->check(CLI::PositiveNumber);
    sweep->add_option("-o,--out", out_path, "Write raw rows here instead of stdout");
    sweep->add_option("--aggregate", aggregate_path, "Write per-scenario mean/min W here");
    sweep->add_flag("--serial", serial, "Use the single-threaded reference sweep");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive optimal allocation for a tiny block");
    oracle->add_option("-c,--config", config_path, "Experiment config (JSON)")->required();

    std::string histogram_path;
    auto* fit = app.add_subcommand("fit", "Fit an exponential discount factor to a deadline histogram");
    fit->add_option("histogram", histogram_path, "CSV with header slot,bytes")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*allocate) return cmd_allocate(config_path);
        if (*sweep) return cmd_sweep(config_path, axis, values, repetitions, out_path, aggregate_path, serial);
        if (*oracle) return cmd_oracle(config_path);
        if (*fit) return cmd_fit(histogram_path);
    } catch (const dara::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
