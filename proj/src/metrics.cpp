#include "dara/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dara/error.hpp"

namespace dara {

double objective_from_rates(std::span<const double> coefficients, std::span<const double> rates,
                            Objective objective) {
    if (coefficients.size() != rates.size()) {
        throw Error(ErrorCode::LengthMismatch, "coefficient and rate vectors differ in length");
    }
    if (objective == Objective::MaxMin) {
        double w = std::numeric_limits<double>::infinity();
        for (std::size_t n = 0; n < rates.size(); ++n) w = std::min(w, coefficients[n] * rates[n]);
        return w;
    }
    double w = 0.0;
    for (std::size_t n = 0; n < rates.size(); ++n) w += coefficients[n] * rates[n];
    return w;
}

UtilityReport utility(const RabConfig& config, const Allocation& alloc, Objective objective) {
    UtilityReport report;
    report.per_sensor_rate = rates_of_allocation(config, alloc);
    const auto n = static_cast<std::size_t>(config.sensor_count());
    std::vector<double> coeff(n);
    report.per_sensor_utility.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = config.sensor(static_cast<SensorId>(i + 1));
        coeff[i] = s.utility_coefficient();
        report.per_sensor_utility[i] = s.qbar * s.h * report.per_sensor_rate.r[i];
    }
    report.objective_value = objective_from_rates(coeff, report.per_sensor_rate.r, objective);
    if (const auto delta = config.common_delta()) report.gap_bound = gap_bound(*delta, config.slots());
    return report;
}

UtilityReport utility(const RabConfig& config, const Allocation& alloc, Objective objective,
                      const RateVector& target) {
    auto report = utility(config, alloc, objective);
    if (target.size() != report.per_sensor_rate.size()) {
        throw Error(ErrorCode::TargetDimensionMismatch, "target has " + std::to_string(target.size()) + " entries");
    }
    report.gap_to_target.resize(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
        report.gap_to_target[i] = report.per_sensor_rate.r[i] - target.r[i];
    }
    return report;
}

RateVector normalized_rates(double delta, std::optional<int> slots, const RateVector& r) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw Error(ErrorCode::DeltaOutOfRange, "delta outside [0,1]");
    double horizon = 0.0;
    if (!slots) {
        if (delta == 1.0) throw Error(ErrorCode::DeltaOne, "infinite horizon needs delta < 1");
        horizon = 1.0 / (1.0 - delta);
    } else {
        if (*slots < 1) throw Error(ErrorCode::InvalidArgument, "horizon must be positive");
        horizon = delta == 1.0 ? static_cast<double>(*slots)
                               : (1.0 - std::pow(delta, *slots)) / (1.0 - delta);
    }
    RateVector out{r.r, std::vector<double>(r.size())};
    for (std::size_t i = 0; i < r.size(); ++i) out.v[i] = r.r[i] / horizon;
    return out;
}

double gap_bound(double delta, int slots) {
    if (!(delta >= 0.0 && delta < 1.0)) throw Error(ErrorCode::DeltaOutOfRange, "delta outside [0,1)");
    if (slots < 1) throw Error(ErrorCode::InvalidArgument, "horizon must be positive");
    return std::pow(delta, slots);
}

std::vector<double> normalize_by_max(std::span<const double> values) {
    std::vector<double> out(values.begin(), values.end());
    if (out.empty()) return out;
    const double top = *std::max_element(out.begin(), out.end());
    if (top > 0.0) {
        for (double& x : out) x /= top;
    }
    return out;
}

}  // namespace dara
