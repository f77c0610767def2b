#include "dara/rate_alloc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dara/error.hpp"

namespace dara {

std::string_view to_string(Objective objective) noexcept {
    return objective == Objective::MaxMin ? "MaxMin" : "WeightedSum";
}

Objective objective_from_string(std::string_view name) {
    if (name == "MaxMin") return Objective::MaxMin;
    if (name == "WeightedSum") return Objective::WeightedSum;
    throw Error(ErrorCode::ConfigError, "unknown objective '" + std::string(name) + "'");
}

Budget achievable_budget(const RabConfig& config) {
    Budget b{0.0, 0.0};
    for (int t = 1; t <= config.slots(); ++t) {
        double lo = config.weight(1, t);
        double hi = lo;
        for (SensorId n = 2; n <= config.sensor_count(); ++n) {
            const double w = config.weight(n, t);
            lo = std::min(lo, w);
            hi = std::max(hi, w);
        }
        b.rmin += lo;
        b.rmax += hi;
    }
    return b;
}

double feasibility_threshold(int sensors) {
    if (sensors < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sensor");
    return 1.0 - 1.0 / static_cast<double>(sensors);
}

namespace {

std::vector<double> coefficients(const RabConfig& config) {
    std::vector<double> c(static_cast<std::size_t>(config.sensor_count()));
    for (SensorId n = 1; n <= config.sensor_count(); ++n) {
        c[static_cast<std::size_t>(n - 1)] = config.sensor(n).utility_coefficient();
    }
    return c;
}

void require_budget(double budget) {
    if (!(budget > 0.0) || !std::isfinite(budget)) {
        throw Error(ErrorCode::InvalidArgument, "budget must be positive, got " + std::to_string(budget));
    }
}

void fill_normalized(const RabConfig& config, RateVector& out) {
    out.v.resize(out.r.size());
    for (std::size_t i = 0; i < out.r.size(); ++i) {
        const double total = config.sensor(static_cast<SensorId>(i + 1)).profile.total();
        out.v[i] = total > 0.0 ? out.r[i] / total : 0.0;
    }
}

}  // namespace

RateVector maxmin_rates(const RabConfig& config, double budget) {
    require_budget(budget);
    const auto c = coefficients(config);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!(c[i] > 0.0)) {
            throw Error(ErrorCode::ZeroUtilityCoefficient,
                        "sensor " + std::to_string(i + 1) + " has alpha*qbar*h = 0");
        }
    }
    RateVector out;
    out.r.resize(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) {
        double denom = 0.0;
        for (const double ci : c) denom += c[n] / ci;
        out.r[n] = budget / denom;
    }
    fill_normalized(config, out);
    return out;
}

RateVector weightedsum_rates(const RabConfig& config, double budget) {
    require_budget(budget);
    const auto c = coefficients(config);
    const double best = *std::max_element(c.begin(), c.end());
    const auto winners = std::count(c.begin(), c.end(), best);
    RateVector out;
    out.r.assign(c.size(), 0.0);
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n] == best) out.r[n] = budget / static_cast<double>(winners);
    }
    fill_normalized(config, out);
    return out;
}

RateVector target_rates(const RabConfig& config, Objective objective, double budget) {
    return objective == Objective::MaxMin ? maxmin_rates(config, budget) : weightedsum_rates(config, budget);
}

bool check_infinite_horizon_feasible(double delta, int sensors, const RateVector& r) {
    if (sensors < 1 || r.size() != static_cast<std::size_t>(sensors)) return false;
    if (!(delta >= 0.0 && delta < 1.0)) return false;
    if (delta < feasibility_threshold(sensors) - kTolerance) return false;
    if (std::any_of(r.r.begin(), r.r.end(), [](double x) { return !(x >= 0.0); })) return false;
    return std::abs(r.sum() - 1.0 / (1.0 - delta)) <= kTolerance;
}

}  // namespace dara
