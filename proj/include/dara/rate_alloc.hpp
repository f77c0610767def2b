#ifndef DARA_RATE_ALLOC_HPP
#define DARA_RATE_ALLOC_HPP

#include <string_view>

#include "dara/model.hpp"

namespace dara {

enum class Objective { MaxMin, WeightedSum };

std::string_view to_string(Objective objective) noexcept;
Objective objective_from_string(std::string_view name);

/// Bounds on the total weighted rate any allocation of the block can reach.
struct Budget {
    double rmin;  ///< sum over slots of the smallest sensor weight
    double rmax;  ///< sum over slots of the largest sensor weight
};

Budget achievable_budget(const RabConfig& config);

/// Smallest common discount factor for which every rate vector on the
/// infinite-horizon budget hyperplane is achievable: 1 - 1/N.
double feasibility_threshold(int sensors);

/// Max-min fair split of `budget`: equalizes alpha*qbar*h*r across sensors.
RateVector maxmin_rates(const RabConfig& config, double budget);

/// Linear objective: whole budget to the largest alpha*qbar*h, exact ties split evenly.
RateVector weightedsum_rates(const RabConfig& config, double budget);

/// Dispatches on the objective.
RateVector target_rates(const RabConfig& config, Objective objective, double budget);

/// True iff r sums to 1/(1-delta), has no negative entry, and delta clears
/// the feasibility threshold for N sensors.
bool check_infinite_horizon_feasible(double delta, int sensors, const RateVector& r);

}  // namespace dara

#endif  // DARA_RATE_ALLOC_HPP
