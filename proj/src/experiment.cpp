#include "dara/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <random>
#include <cstdio>
#include <string>

#include "dara/error.hpp"
#include "dara/parallel.hpp"
#include "dara/weights.hpp"

namespace dara {

std::string_view to_string(Policy policy) noexcept {
    switch (policy) {
        case Policy::Dara: return "dara";
        case Policy::Decomposition: return "decomposition";
        case Policy::RoundRobin: return "rr";
        case Policy::RateRoundRobin: return "rrr";
        case Policy::RateDelayRoundRobin: return "rdrr";
        case Policy::Optimal: return "optimal";
    }
    return "unknown";
}

Policy policy_from_string(std::string_view name) {
    for (const Policy p : {Policy::Dara, Policy::Decomposition, Policy::RoundRobin, Policy::RateRoundRobin,
                           Policy::RateDelayRoundRobin, Policy::Optimal}) {
        if (to_string(p) == name) return p;
    }
    throw Error(ErrorCode::UnknownPolicy, "unknown policy '" + std::string(name) + "'");
}

SweepAxis::Kind axis_from_string(std::string_view name) {
    if (name == "N") return SweepAxis::Kind::N;
    if (name == "delta") return SweepAxis::Kind::Delta;
    if (name == "T") return SweepAxis::Kind::T;
    throw Error(ErrorCode::ConfigError, "unknown sweep axis '" + std::string(name) + "'");
}

void validate_experiment(const ExperimentConfig& config) {
    if (config.N < 1) throw Error(ErrorCode::ConfigError, "N must be at least 1");
    if (config.T < 1) throw Error(ErrorCode::ConfigError, "T must be at least 1");
    if (config.policies.empty()) throw Error(ErrorCode::ConfigError, "no policies requested");
    if (!(config.qbar > 0.0)) throw Error(ErrorCode::ConfigError, "qbar must be positive");
    if (config.h.kind == HDistribution::Kind::Constant && !(config.h.mean > 0.0)) {
        throw Error(ErrorCode::ConfigError, "constant h must be positive");
    }
    if (config.h.kind == HDistribution::Kind::Normal && !(config.h.stddev >= 0.0)) {
        throw Error(ErrorCode::ConfigError, "h stddev must be non-negative");
    }
    if (config.alpha && config.alpha->size() != static_cast<std::size_t>(config.N)) {
        throw Error(ErrorCode::ConfigError, "alpha needs one entry per sensor");
    }
    if (config.profiles.kind == ProfileSpec::Kind::Explicit &&
        config.profiles.entries.size() != static_cast<std::size_t>(config.N)) {
        throw Error(ErrorCode::ConfigError, "profiles needs one entry per sensor");
    }
    validate_params(config.dara);
}

namespace {

// Histograms are per block: deadlines past slot T land in the last bucket.
DeadlineHistogram fit_to_slots(DeadlineHistogram hist, int slots) {
    auto& b = hist.bytes_by_deadline;
    const auto T = static_cast<std::size_t>(slots);
    if (b.size() > T) {
        double overflow = 0.0;
        for (std::size_t i = T; i < b.size(); ++i) overflow += b[i];
        b.resize(T);
        b.back() += overflow;
    } else {
        b.resize(T, 0.0);
    }
    return hist;
}

WeightProfile profile_for(const ExperimentConfig& config, int sensor) {
    const auto& spec = config.profiles;
    switch (spec.kind) {
        case ProfileSpec::Kind::Identical:
            return exponential_profile(spec.delta, config.T);
        case ProfileSpec::Kind::Range: {
            const double frac = config.N > 1 ? static_cast<double>(sensor - 1) / (config.N - 1) : 0.0;
            return exponential_profile(spec.delta_lo + (spec.delta_hi - spec.delta_lo) * frac, config.T);
        }
        case ProfileSpec::Kind::Explicit: {
            const auto& e = spec.entries[static_cast<std::size_t>(sensor - 1)];
            if (e.delta) return exponential_profile(*e.delta, config.T);
            return profile_from_histogram(fit_to_slots(read_histogram_csv(e.histogram), config.T));
        }
    }
    throw Error(ErrorCode::ConfigError, "bad profile spec");
}

}  // namespace

RabConfig build_rab(const ExperimentConfig& config) {
    validate_experiment(config);
    std::mt19937_64 rng(config.seed);
    std::vector<SensorSpec> sensors;
    sensors.reserve(static_cast<std::size_t>(config.N));
    for (int n = 1; n <= config.N; ++n) {
        SensorSpec s;
        s.id = n;
        s.alpha = config.alpha ? (*config.alpha)[static_cast<std::size_t>(n - 1)] : 1.0 / config.N;
        s.qbar = config.qbar;
        if (config.h.kind == HDistribution::Kind::Normal && config.h.stddev > 0.0) {
            std::normal_distribution<double> dist(config.h.mean, config.h.stddev);
            s.h = dist(rng);
        } else {
            s.h = config.h.mean;
        }
        s.h = std::max(s.h, kMinFramesPerSlot);
        s.profile = profile_for(config, n);
        sensors.push_back(std::move(s));
    }
    RabConfig rab(config.T, std::move(sensors));
    validate_rab(rab);
    return rab;
}

double scenario_budget(const ExperimentConfig& config, const RabConfig& rab) {
    const Budget bounds = achievable_budget(rab);
    if (!config.budget) return bounds.rmin;
    const double b = *config.budget;
    if (!(b >= bounds.rmin - kTolerance && b <= bounds.rmax + kTolerance)) {
        throw Error(ErrorCode::ConfigError, "budget override " + std::to_string(b) + " outside [Rmin, Rmax] = [" +
                                                std::to_string(bounds.rmin) + ", " + std::to_string(bounds.rmax) + "]");
    }
    return b;
}

std::vector<ResultRow> run_scenario(const ExperimentConfig& config) {
    const RabConfig rab = build_rab(config);
    const double budget = scenario_budget(config, rab);
    const RateVector target = target_rates(rab, config.objective, budget);

    std::vector<std::optional<double>> deltas;
    for (SensorId n = 1; n <= rab.sensor_count(); ++n) deltas.push_back(rab.sensor(n).profile.delta());

    std::vector<ResultRow> rows;
    rows.reserve(config.policies.size());
    for (const Policy policy : config.policies) {
        const auto start = std::chrono::steady_clock::now();
        Allocation alloc;
        switch (policy) {
            case Policy::Dara:
                alloc = dara_allocate(rab, target, config.dara).allocation;
                break;
            case Policy::Decomposition: {
                const auto delta = rab.common_delta();
                if (!delta) {
                    throw Error(ErrorCode::ConfigError, "decomposition needs identical exponential profiles");
                }
                alloc = decomposition_allocate(*delta, rab.sensor_count(), rab.slots(), target).allocation;
                break;
            }
            case Policy::RoundRobin:
                alloc = round_robin(rab);
                break;
            case Policy::RateRoundRobin:
                alloc = r_round_robin(rab, rate_shares(rab));
                break;
            case Policy::RateDelayRoundRobin:
                alloc = rd_round_robin(rab);
                break;
            case Policy::Optimal:
                alloc = optimal_exhaustive(rab, config.objective).allocation;
                break;
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const UtilityReport report = utility(rab, alloc, config.objective, target);

        ResultRow row;
        row.scenario = config.scenario;
        row.policy = policy;
        row.N = config.N;
        row.T = config.T;
        row.deltas = deltas;
        row.seed = config.seed;
        row.allocation = std::move(alloc);
        row.r_target = target.r;
        row.r_achieved = report.per_sensor_rate.r;
        row.Q = report.per_sensor_utility;
        row.W = report.objective_value;
        row.gap = report.gap_to_target;
        row.gap_bound = report.gap_bound;
        row.wall_time_s = elapsed;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t derive_seed(std::uint64_t seed, int repetition) noexcept {
    // splitmix64 finalizer
    std::uint64_t z = seed + static_cast<std::uint64_t>(repetition) + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

struct Cell {
    ExperimentConfig config;
    std::size_t axis_pos;
    int repetition;
};

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<Cell> make_cells(const ExperimentConfig& base, const SweepAxis& axis, int repetitions) {
    if (repetitions < 1) throw Error(ErrorCode::ConfigError, "repetitions must be at least 1");
    if (axis.values.empty()) throw Error(ErrorCode::ConfigError, "sweep axis has no values");
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < axis.values.size(); ++i) {
        const double value = axis.values[i];
        for (int k = 0; k < repetitions; ++k) {
            ExperimentConfig c = base;
            std::string label;
            switch (axis.kind) {
                case SweepAxis::Kind::N:
                    if (value < 1 || value != std::floor(value)) throw Error(ErrorCode::ConfigError, "N values must be positive integers");
                    c.N = static_cast<int>(value);
                    label = "N=" + std::to_string(c.N);
                    break;
                case SweepAxis::Kind::T:
                    if (value < 1 || value != std::floor(value)) throw Error(ErrorCode::ConfigError, "T values must be positive integers");
                    c.T = static_cast<int>(value);
                    label = "T=" + std::to_string(c.T);
                    break;
                case SweepAxis::Kind::Delta:
                    c.profiles = ProfileSpec{};
                    c.profiles.kind = ProfileSpec::Kind::Identical;
                    c.profiles.delta = value;
                    label = "delta=" + format_value(value);
                    break;
            }
            c.scenario = base.scenario + "/" + label;
            c.seed = derive_seed(base.seed, k);
            cells.push_back(Cell{std::move(c), i, k});
        }
    }
    return cells;
}

SweepResult assemble(const std::vector<Cell>& cells, std::vector<std::vector<ResultRow>>& per_cell) {
    struct Keyed {
        std::size_t axis_pos;
        std::size_t policy_pos;
        int repetition;
        ResultRow row;
    };
    std::vector<Keyed> keyed;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        for (std::size_t p = 0; p < per_cell[c].size(); ++p) {
            ResultRow row = std::move(per_cell[c][p]);
            row.repetition = cells[c].repetition;
            keyed.push_back(Keyed{cells[c].axis_pos, p, cells[c].repetition, std::move(row)});
        }
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.axis_pos != b.axis_pos) return a.axis_pos < b.axis_pos;
        if (a.policy_pos != b.policy_pos) return a.policy_pos < b.policy_pos;
        return a.repetition < b.repetition;
    });

    SweepResult out;
    for (auto& k : keyed) out.rows.push_back(std::move(k.row));

    // One aggregate per (axis position, policy); rows are already grouped.
    for (std::size_t i = 0; i < out.rows.size();) {
        std::size_t j = i;
        AggregateRow agg;
        agg.scenario = out.rows[i].scenario;
        agg.policy = out.rows[i].policy;
        agg.W_min = out.rows[i].W;
        double sum = 0.0;
        while (j < out.rows.size() && out.rows[j].scenario == agg.scenario && out.rows[j].policy == agg.policy) {
            sum += out.rows[j].W;
            agg.W_min = std::min(agg.W_min, out.rows[j].W);
            ++j;
        }
        agg.repetitions = static_cast<int>(j - i);
        agg.W_mean = sum / agg.repetitions;
        out.aggregates.push_back(agg);
        i = j;
    }
    for (auto& agg : out.aggregates) {
        double best = 0.0;
        for (const auto& other : out.aggregates) {
            if (other.policy == agg.policy) best = std::max(best, other.W_mean);
        }
        agg.W_mean_normalized = best > 0.0 ? agg.W_mean / best : 0.0;
    }
    return out;
}

}  // namespace

SweepResult sweep_serial(const ExperimentConfig& base, const SweepAxis& axis, int repetitions) {
    const auto cells = make_cells(base, axis, repetitions);
    std::vector<std::vector<ResultRow>> per_cell(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) per_cell[c] = run_scenario(cells[c].config);
    return assemble(cells, per_cell);
}

SweepResult sweep(const ExperimentConfig& base, const SweepAxis& axis, int repetitions) {
    const auto cells = make_cells(base, axis, repetitions);
    std::vector<std::vector<ResultRow>> per_cell(cells.size());
    std::vector<std::exception_ptr> failure(cells.size());
    const auto count = static_cast<long>(cells.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (long c = 0; c < count; ++c) {
        try {
            per_cell[static_cast<std::size_t>(c)] = run_scenario(cells[static_cast<std::size_t>(c)].config);
        } catch (...) {
            failure[static_cast<std::size_t>(c)] = std::current_exception();
        }
    }
    for (const auto& f : failure) {
        if (f) std::rethrow_exception(f);
    }
    return assemble(cells, per_cell);
}

}  // namespace dara
