#ifndef DARA_EXPERIMENT_HPP
#define DARA_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dara/metrics.hpp"
#include "dara/model.hpp"
#include "dara/policies.hpp"
#include "dara/rate_alloc.hpp"

namespace dara {

enum class Policy { Dara, Decomposition, RoundRobin, RateRoundRobin, RateDelayRoundRobin, Optimal };

/// Config/CSV names: dara, decomposition, rr, rrr, rdrr, optimal.
std::string_view to_string(Policy policy) noexcept;
Policy policy_from_string(std::string_view name);

/// How sensor weight profiles are produced for a scenario.
struct ProfileSpec {
    enum class Kind { Identical, Range, Explicit };
    struct Entry {
        std::optional<double> delta;          ///< exponential profile
        std::filesystem::path histogram;      ///< otherwise, deadline histogram CSV
    };

    Kind kind = Kind::Identical;
    double delta = 0.99;                  ///< Identical
    double delta_lo = 0.99, delta_hi = 0.99;  ///< Range: equally spaced, sensor 1 gets delta_lo
    std::vector<Entry> entries;           ///< Explicit: one per sensor
};

struct HDistribution {
    enum class Kind { Constant, Normal };
    Kind kind = Kind::Constant;
    double mean = 1.0;  ///< the constant value for Constant
    double stddev = 0.0;
};

/// Draws below this are clamped so every utility coefficient stays positive.
inline constexpr double kMinFramesPerSlot = 1e-6;

struct ExperimentConfig {
    std::string scenario = "scenario";
    int N = 1;
    int T = 1;
    ProfileSpec profiles;
    Objective objective = Objective::MaxMin;
    DaraParams dara;
    HDistribution h;
    double qbar = 1.0;
    std::optional<std::vector<double>> alpha;  ///< empty means uniform 1/N
    std::uint64_t seed = 0;
    std::vector<Policy> policies{Policy::Dara};
    std::optional<double> budget;
};

void validate_experiment(const ExperimentConfig& config);

/// Block described by the config, with h_n drawn from the configured
/// distribution using `config.seed` (sensor 1 first).
RabConfig build_rab(const ExperimentConfig& config);

struct ResultRow {
    std::string scenario;
    Policy policy = Policy::Dara;
    int N = 0;
    int T = 0;
    std::vector<std::optional<double>> deltas;
    std::uint64_t seed = 0;
    int repetition = 0;
    Allocation allocation;
    std::vector<double> r_target;
    std::vector<double> r_achieved;
    std::vector<double> Q;
    double W = 0.0;
    std::vector<double> gap;
    std::optional<double> gap_bound;
    double wall_time_s = 0.0;
};

/// Runs every configured policy against one block. Same config, same rows
/// (wall time aside).
std::vector<ResultRow> run_scenario(const ExperimentConfig& config);

/// Budget the target rates are computed from: the override, else Rmin.
double scenario_budget(const ExperimentConfig& config, const RabConfig& rab);

struct SweepAxis {
    enum class Kind { N, Delta, T };
    Kind kind = Kind::N;
    std::vector<double> values;
};

SweepAxis::Kind axis_from_string(std::string_view name);

struct AggregateRow {
    std::string scenario;
    Policy policy = Policy::Dara;
    int repetitions = 0;
    double W_mean = 0.0;
    double W_min = 0.0;
    double W_mean_normalized = 0.0;  ///< W_mean over the policy's best W_mean in the sweep
};

struct SweepResult {
    std::vector<ResultRow> rows;
    std::vector<AggregateRow> aggregates;
};

/// Seed for repetition k: splitmix64(seed + k).
std::uint64_t derive_seed(std::uint64_t seed, int repetition) noexcept;

/// Runs every (axis value, repetition) cell, in parallel when built with
/// OpenMP. Rows come back ordered by axis position, then policy order in
/// the config, then repetition.
SweepResult sweep(const ExperimentConfig& base, const SweepAxis& axis, int repetitions);

/// Single-threaded reference for sweep(); returns identical rows.
SweepResult sweep_serial(const ExperimentConfig& base, const SweepAxis& axis, int repetitions);

/// Header: scenario,policy,N,T,delta,seed,sensor,r_target,r_achieved,Q,W,gap,gap_bound
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

/// Parses the JSON config document. Relative histogram paths resolve against
/// `base_dir`. Throws ConfigError.
ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

}  // namespace dara

#endif  // DARA_EXPERIMENT_HPP
