#include "dara/model.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dara/error.hpp"

namespace dara {

double WeightProfile::total() const noexcept {
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

double RateVector::sum() const noexcept {
    return std::accumulate(r.begin(), r.end(), 0.0);
}

RabConfig::RabConfig(int slots, std::vector<SensorSpec> sensors)
    : slots_(slots), sensors_(std::move(sensors)), index_of_id_(sensors_.size(), -1) {
    const int n = sensor_count();
    for (int i = 0; i < n; ++i) {
        const SensorId id = sensors_[static_cast<std::size_t>(i)].id;
        if (id >= 1 && id <= n && index_of_id_[static_cast<std::size_t>(id - 1)] < 0) {
            index_of_id_[static_cast<std::size_t>(id - 1)] = i;
        }
    }
}

const SensorSpec& RabConfig::sensor(SensorId id) const {
    if (id < 1 || id > sensor_count() || index_of_id_[static_cast<std::size_t>(id - 1)] < 0) {
        throw Error(ErrorCode::InvalidSensor, "no sensor with id " + std::to_string(id));
    }
    return sensors_[static_cast<std::size_t>(index_of_id_[static_cast<std::size_t>(id - 1)])];
}

std::optional<double> RabConfig::common_delta() const noexcept {
    if (sensors_.empty()) return std::nullopt;
    const auto first = sensors_.front().profile.delta();
    if (!first) return std::nullopt;
    for (const auto& s : sensors_) {
        if (s.profile.delta() != first) return std::nullopt;
    }
    return first;
}

void validate_profile(const WeightProfile& profile) {
    const auto w = profile.weights();
    if (w.empty()) throw Error(ErrorCode::LengthMismatch, "weight profile is empty");
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (!std::isfinite(w[t]) || w[t] < -kTolerance || w[t] > 1.0 + kTolerance) {
            throw Error(ErrorCode::WeightOutOfRange,
                        "weight at slot " + std::to_string(t + 1) + " outside [0,1]");
        }
    }
    if (std::abs(w[0] - 1.0) > kTolerance) {
        throw Error(ErrorCode::BadNormalization, "first weight must be 1");
    }
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
        if (w[t + 1] > w[t] + kTolerance) {
            throw Error(ErrorCode::NonMonotoneWeights,
                        "weight increases at slot " + std::to_string(t + 1));
        }
    }
    if (const auto delta = profile.delta()) {
        if (!(*delta >= 0.0 && *delta < 1.0)) {
            throw Error(ErrorCode::DeltaOutOfRange, "exponential profile delta outside [0,1)");
        }
        constexpr double eps = std::numeric_limits<double>::epsilon();
        for (std::size_t k = 0; k < w.size(); ++k) {
            const double expect = std::pow(*delta, static_cast<double>(k));
            const double slack = 2.0 * static_cast<double>(k + 1) * eps * expect;
            if (std::abs(w[k] - expect) > slack) {
                throw Error(ErrorCode::WeightOutOfRange,
                            "exponential profile deviates from delta^(t-1) at slot " +
                                std::to_string(k + 1));
            }
        }
    }
}

void validate_rab(const RabConfig& config) {
    if (config.slots() < 1) throw Error(ErrorCode::LengthMismatch, "block needs at least one slot");
    if (config.sensor_count() < 1) throw Error(ErrorCode::InvalidSensor, "block needs at least one sensor");

    const auto T = static_cast<std::size_t>(config.slots());
    for (const auto& s : config.sensors()) {
        if (s.profile.size() != T) {
            throw Error(ErrorCode::LengthMismatch,
                        "sensor " + std::to_string(s.id) + " profile length " +
                            std::to_string(s.profile.size()) + " != T=" + std::to_string(T));
        }
        validate_profile(s.profile);
    }

    std::vector<bool> seen(static_cast<std::size_t>(config.sensor_count()), false);
    for (const auto& s : config.sensors()) {
        if (s.id < 1 || s.id > config.sensor_count() || seen[static_cast<std::size_t>(s.id - 1)]) {
            throw Error(ErrorCode::InvalidSensor, "sensor ids must be a permutation of 1..N");
        }
        seen[static_cast<std::size_t>(s.id - 1)] = true;
        if (!(s.alpha >= 0.0 && s.alpha <= 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "alpha outside [0,1] for sensor " + std::to_string(s.id));
        }
        if (!(s.qbar > 0.0) || !(s.h > 0.0) || !std::isfinite(s.qbar) || !std::isfinite(s.h)) {
            throw Error(ErrorCode::InvalidArgument, "qbar and h must be positive for sensor " + std::to_string(s.id));
        }
    }

    double alpha_sum = 0.0;
    for (const auto& s : config.sensors()) alpha_sum += s.alpha;
    if (std::abs(alpha_sum - 1.0) > kTolerance) {
        throw Error(ErrorCode::AlphaSumMismatch, "alpha sums to " + std::to_string(alpha_sum));
    }
}

void validate_allocation(const RabConfig& config, const Allocation& alloc) {
    if (alloc.size() != config.slots()) {
        throw Error(ErrorCode::LengthMismatch, "allocation has " + std::to_string(alloc.size()) +
                                                   " slots, block has " + std::to_string(config.slots()));
    }
    for (const SensorId id : alloc.slots) {
        if (id < 1 || id > config.sensor_count()) {
            throw Error(ErrorCode::InvalidSensor, "allocation names unknown sensor " + std::to_string(id));
        }
    }
}

RateVector rates_of_allocation(const RabConfig& config, const Allocation& alloc) {
    validate_allocation(config, alloc);
    const auto n = static_cast<std::size_t>(config.sensor_count());
    RateVector out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    for (int t = 1; t <= config.slots(); ++t) {
        const SensorId id = alloc[static_cast<std::size_t>(t - 1)];
        out.r[static_cast<std::size_t>(id - 1)] += config.weight(id, t);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double total = config.sensor(static_cast<SensorId>(i + 1)).profile.total();
        out.v[i] = total > 0.0 ? out.r[i] / total : 0.0;
    }
    return out;
}

}  // namespace dara
