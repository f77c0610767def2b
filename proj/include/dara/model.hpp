#ifndef DARA_MODEL_HPP
#define DARA_MODEL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dara {

/// Absolute slack used by every invariant check on real values.
inline constexpr double kTolerance = 1e-9;

/// Dense sensor identifier in 1..N.
using SensorId = int;

/// Per-slot valuation of one sender: slot t is worth weights()[t-1].
///
/// Profiles built by exponential_profile() keep their discount factor so the
/// analytic paths (feasibility threshold, decomposition, gap bound) can use it.
/// Construction does not validate; see validate_profile().
class WeightProfile {
public:
    WeightProfile() = default;

    static WeightProfile exponential(std::vector<double> weights, double delta) {
        return WeightProfile(std::move(weights), delta);
    }
    static WeightProfile empirical(std::vector<double> weights) {
        return WeightProfile(std::move(weights), std::nullopt);
    }

    std::span<const double> weights() const noexcept { return weights_; }
    double operator[](std::size_t t) const { return weights_[t]; }
    std::size_t size() const noexcept { return weights_.size(); }

    bool is_exponential() const noexcept { return delta_.has_value(); }
    std::optional<double> delta() const noexcept { return delta_; }

    /// Sum of all slot weights: the most this sender can collect in one block.
    double total() const noexcept;

private:
    WeightProfile(std::vector<double> weights, std::optional<double> delta)
        : weights_(std::move(weights)), delta_(delta) {}

    std::vector<double> weights_;
    std::optional<double> delta_;
};

struct SensorSpec {
    SensorId id = 1;
    double alpha = 1.0;  ///< objective weight
    double qbar = 1.0;   ///< expected delivery utility per frame
    double h = 1.0;      ///< MAC frames per allocated slot
    WeightProfile profile;

    /// alpha * qbar * h, the per-unit-rate contribution to the max-min objective.
    double utility_coefficient() const noexcept { return alpha * qbar * h; }
};

/// One resource allocation block: T slots shared by N sensors.
class RabConfig {
public:
    RabConfig(int slots, std::vector<SensorSpec> sensors);

    int slots() const noexcept { return slots_; }
    int sensor_count() const noexcept { return static_cast<int>(sensors_.size()); }
    std::span<const SensorSpec> sensors() const noexcept { return sensors_; }

    /// Lookup by id. Throws InvalidSensor for ids outside 1..N or absent ids.
    const SensorSpec& sensor(SensorId id) const;

    /// Weight of slot t (1-based) for sensor id.
    double weight(SensorId id, int t) const { return sensor(id).profile[static_cast<std::size_t>(t - 1)]; }

    /// Common discount factor when every profile is exponential with the same delta.
    std::optional<double> common_delta() const noexcept;

private:
    int slots_;
    std::vector<SensorSpec> sensors_;
    std::vector<int> index_of_id_;  // id-1 -> position in sensors_, -1 if missing
};

struct Allocation {
    std::vector<SensorId> slots;

    int size() const noexcept { return static_cast<int>(slots.size()); }
    SensorId operator[](std::size_t t) const { return slots[t]; }
    friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// Weighted sum rates r and their normalized form v, indexed by sensor id - 1.
struct RateVector {
    std::vector<double> r;
    std::vector<double> v;

    std::size_t size() const noexcept { return r.size(); }
    double sum() const noexcept;
};

/// Checks a single profile: non-empty, first weight 1, monotone, values in [0,1],
/// and exact powers when tagged exponential.
void validate_profile(const WeightProfile& profile);

/// Throws dara::Error on the first violated invariant of the block.
void validate_rab(const RabConfig& config);

/// Throws when the allocation does not match the block's length or names an
/// unknown sensor.
void validate_allocation(const RabConfig& config, const Allocation& alloc);

/// r[n] = sum of w_{n,t} over the slots t given to sensor n. v[n] divides r[n]
/// by the sensor's total weight over the block.
RateVector rates_of_allocation(const RabConfig& config, const Allocation& alloc);

}  // namespace dara

#endif  // DARA_MODEL_HPP
