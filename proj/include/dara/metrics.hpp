#ifndef DARA_METRICS_HPP
#define DARA_METRICS_HPP

#include <optional>
#include <span>
#include <vector>

#include "dara/model.hpp"
#include "dara/rate_alloc.hpp"

namespace dara {

struct UtilityReport {
    std::vector<double> per_sensor_utility;  ///< Q_n = qbar_n h_n r_n
    double objective_value = 0.0;            ///< W under the chosen objective
    RateVector per_sensor_rate;
    std::vector<double> gap_to_target;       ///< achieved r minus target r; empty without a target
    std::optional<double> gap_bound;         ///< delta^T when all sensors share one exponential profile
};

/// W from per-sensor coefficients alpha*qbar*h and weighted rates:
/// min_n c_n r_n for MaxMin, sum_n c_n r_n for WeightedSum.
double objective_from_rates(std::span<const double> coefficients, std::span<const double> rates,
                            Objective objective);

UtilityReport utility(const RabConfig& config, const Allocation& alloc, Objective objective);
UtilityReport utility(const RabConfig& config, const Allocation& alloc, Objective objective,
                      const RateVector& target);

/// Fills v with r divided by the geometric weight of the horizon,
/// (1-delta^T)/(1-delta), or 1/(1-delta) when slots is empty (infinite).
RateVector normalized_rates(double delta, std::optional<int> slots, const RateVector& r);

/// Finite-horizon distance bound on normalized rates: delta^T.
double gap_bound(double delta, int slots);

/// Divides by the largest entry so the maximum maps to 1. Reporting only.
std::vector<double> normalize_by_max(std::span<const double> values);

}  // namespace dara

#endif  // DARA_METRICS_HPP
