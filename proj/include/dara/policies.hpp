#ifndef DARA_POLICIES_HPP
#define DARA_POLICIES_HPP

#include <cstdint>
#include <vector>

#include "dara/model.hpp"
#include "dara/rate_alloc.hpp"

namespace dara {

/// Exponents of the three-factor allocation index and the floor applied to the
/// remaining-weight term so the last slot stays finite.
struct DaraParams {
    double mu = 1.0;
    double nu = 1.0;
    double gamma = 1.0;
    double tail_floor = 1e-12;
};

void validate_params(const DaraParams& params);

/// Allocation plus the per-slot state the policy looked at.
///
/// residuals[t][n] and indices[t][n] are the values for sensor n+1 at the
/// start of slot t+1, before that slot is assigned. final_residuals is the
/// state after the last slot.
struct PolicyTrace {
    Allocation allocation;
    std::vector<std::vector<double>> residuals;
    std::vector<std::vector<double>> indices;
    std::vector<double> final_residuals;
};

/// Non-stationary index allocation. Each slot goes to the sensor maximizing
///   max(f_n, 0)^mu * w_{n,t}^nu * max(sum_{tau>t} w_{n,tau}, tail_floor)^-gamma
/// where f_n starts at target[n] and loses w_{n,t} whenever n wins slot t.
/// Ties go to the lowest id; when every index is zero the largest raw f_n wins.
PolicyTrace dara_allocate(const RabConfig& config, const RateVector& target, const DaraParams& params = {});

/// Continuation-rate decomposition for N sensors sharing discount factor delta.
///
/// The target is scaled onto the infinite-horizon budget 1/(1-delta); sums
/// short of it by at most the truncated tail delta^T/(1-delta) are accepted.
/// Each slot goes to the largest continuation rate g_n (lowest id on ties),
/// then the winner maps g -> (g-1)/delta and everyone else g -> g/delta.
/// Residuals are reported as raw continuation rates g.
PolicyTrace decomposition_allocate(double delta, int sensors, int slots, const RateVector& target);

/// s(t) = ((t-1) mod N) + 1.
Allocation round_robin(const RabConfig& config);

/// Smooth weighted round-robin: every slot each credit grows by its share,
/// the largest credit wins (lowest id on ties) and pays back the share total.
Allocation r_round_robin(const RabConfig& config, const std::vector<double>& shares);

/// Shares used by the rate-proportional baseline: qbar_n * h_n.
std::vector<double> rate_shares(const RabConfig& config);

/// Shares used by the rate/delay baseline: qbar_n * h_n * T / sum_t w_{n,t},
/// so faster-decaying profiles get proportionally more slots.
std::vector<double> rate_delay_shares(const RabConfig& config);

Allocation rd_round_robin(const RabConfig& config);

/// Largest N^T the exhaustive search accepts.
inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;

struct ExhaustiveResult {
    Allocation allocation;
    double value = 0.0;
};

/// Enumerates all N^T allocations and returns the lexicographically smallest
/// maximizer of the objective. Parallel over the enumeration when built with
/// OpenMP; the result is identical to optimal_exhaustive_serial.
ExhaustiveResult optimal_exhaustive(const RabConfig& config, Objective objective);

/// Single-threaded reference enumeration.
ExhaustiveResult optimal_exhaustive_serial(const RabConfig& config, Objective objective);

/// N^T, or throws InstanceTooLarge past kExhaustiveLimit.
std::uint64_t exhaustive_size(int sensors, int slots);

}  // namespace dara

#endif  // DARA_POLICIES_HPP
