#include "dara/policies.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dara/error.hpp"

namespace dara {

void validate_params(const DaraParams& params) {
    if (!(params.tail_floor > 0.0)) throw Error(ErrorCode::InvalidArgument, "tail_floor must be positive");
    if (!std::isfinite(params.mu) || !std::isfinite(params.nu) || !std::isfinite(params.gamma)) {
        throw Error(ErrorCode::InvalidArgument, "DARA exponents must be finite");
    }
}

namespace {

// Index of the largest value; the earliest index wins ties.
std::size_t argmax_lowest(const std::vector<double>& values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    return best;
}

}  // namespace

PolicyTrace dara_allocate(const RabConfig& config, const RateVector& target, const DaraParams& params) {
    validate_params(params);
    const auto N = static_cast<std::size_t>(config.sensor_count());
    const int T = config.slots();
    if (target.size() != N) {
        throw Error(ErrorCode::TargetDimensionMismatch,
                    "target has " + std::to_string(target.size()) + " entries for " + std::to_string(N) + " sensors");
    }

    // tail[n][t-1] = sum of w_{n,tau} for tau > t
    std::vector<std::vector<double>> tail(N, std::vector<double>(static_cast<std::size_t>(T), 0.0));
    for (std::size_t n = 0; n < N; ++n) {
        const auto w = config.sensor(static_cast<SensorId>(n + 1)).profile.weights();
        double acc = 0.0;
        for (int t = T; t-- > 0;) {
            tail[n][static_cast<std::size_t>(t)] = acc;
            acc += w[static_cast<std::size_t>(t)];
        }
    }

    PolicyTrace trace;
    trace.allocation.slots.reserve(static_cast<std::size_t>(T));
    trace.residuals.reserve(static_cast<std::size_t>(T));
    trace.indices.reserve(static_cast<std::size_t>(T));

    std::vector<double> residual = target.r;
    std::vector<double> index(N);
    for (int t = 1; t <= T; ++t) {
        const auto ti = static_cast<std::size_t>(t - 1);
        bool any_positive = false;
        for (std::size_t n = 0; n < N; ++n) {
            const double w = config.weight(static_cast<SensorId>(n + 1), t);
            const double f = std::max(residual[n], 0.0);
            const double urgency = std::max(tail[n][ti], params.tail_floor);
            index[n] = std::pow(f, params.mu) * std::pow(w, params.nu) * std::pow(urgency, -params.gamma);
            if (index[n] > 0.0) any_positive = true;
        }
        const std::size_t winner = any_positive ? argmax_lowest(index) : argmax_lowest(residual);

        trace.residuals.push_back(residual);
        trace.indices.push_back(index);
        trace.allocation.slots.push_back(static_cast<SensorId>(winner + 1));
        residual[winner] -= config.weight(static_cast<SensorId>(winner + 1), t);
    }
    trace.final_residuals = std::move(residual);
    return trace;
}

PolicyTrace decomposition_allocate(double delta, int sensors, int slots, const RateVector& target) {
    if (!(delta >= 0.0 && delta < 1.0)) throw Error(ErrorCode::DeltaOutOfRange, "delta outside [0,1)");
    if (sensors < 1 || slots < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sensor and one slot");
    const auto N = static_cast<std::size_t>(sensors);
    if (target.size() != N) {
        throw Error(ErrorCode::TargetDimensionMismatch,
                    "target has " + std::to_string(target.size()) + " entries for " + std::to_string(N) + " sensors");
    }
    if (delta < feasibility_threshold(sensors) - kTolerance) {
        throw Error(ErrorCode::InfeasibleDelta, "delta=" + std::to_string(delta) + " below 1 - 1/N = " +
                                                    std::to_string(feasibility_threshold(sensors)));
    }

    const double full = 1.0 / (1.0 - delta);
    const double slack = kTolerance * std::max(1.0, full);
    const double truncated = std::pow(delta, slots) * full;
    const double sum = target.sum();
    if (std::any_of(target.r.begin(), target.r.end(), [&](double x) { return !(x >= -slack); }) ||
        !(sum <= full + slack && sum >= full - truncated - slack) || !(sum > 0.0)) {
        throw Error(ErrorCode::InfeasibleTarget,
                    "target sum " + std::to_string(sum) + " is not on the budget 1/(1-delta) = " + std::to_string(full));
    }

    // Work on the simplex: v = share of the infinite-horizon budget.
    std::vector<double> v(N);
    for (std::size_t n = 0; n < N; ++n) v[n] = std::max(target.r[n], 0.0) / sum;

    PolicyTrace trace;
    trace.allocation.slots.reserve(static_cast<std::size_t>(slots));
    auto snapshot = [&] {
        std::vector<double> g(N);
        for (std::size_t n = 0; n < N; ++n) g[n] = v[n] * full;
        return g;
    };

    for (int t = 1; t <= slots; ++t) {
        auto g = snapshot();
        trace.residuals.push_back(g);
        trace.indices.push_back(std::move(g));
        const std::size_t winner = argmax_lowest(v);
        trace.allocation.slots.push_back(static_cast<SensorId>(winner + 1));
        if (N == 1) continue;  // continuation is always (1); also avoids delta = 0

        // The continuation map expands by 1/delta per slot, so rounding noise
        // is pulled back onto the simplex after every step.
        for (std::size_t n = 0; n < N; ++n) {
            v[n] = n == winner ? (v[n] - (1.0 - delta)) / delta : v[n] / delta;
        }
        if (v[winner] < 0.0) {
            if (v[winner] < -kTolerance) {
                throw Error(ErrorCode::InfeasibleTarget,
                            "continuation rate went negative at slot " + std::to_string(t));
            }
            v[winner] = 0.0;
        }
        double total = 0.0;
        for (const double x : v) total += x;
        for (double& x : v) x /= total;
    }
    trace.final_residuals = snapshot();
    return trace;
}

Allocation round_robin(const RabConfig& config) {
    Allocation out;
    out.slots.resize(static_cast<std::size_t>(config.slots()));
    for (int t = 1; t <= config.slots(); ++t) {
        out.slots[static_cast<std::size_t>(t - 1)] = ((t - 1) % config.sensor_count()) + 1;
    }
    return out;
}

Allocation r_round_robin(const RabConfig& config, const std::vector<double>& shares) {
    const auto N = static_cast<std::size_t>(config.sensor_count());
    if (shares.size() != N) {
        throw Error(ErrorCode::LengthMismatch, "need one share per sensor");
    }
    double total = 0.0;
    for (const double s : shares) {
        if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorCode::NonPositiveShare, "shares must be positive");
        total += s;
    }
    // Credits are kept scaled by the share total; integer shares stay exact.
    std::vector<double> credit(N, 0.0);
    Allocation out;
    out.slots.reserve(static_cast<std::size_t>(config.slots()));
    for (int t = 1; t <= config.slots(); ++t) {
        for (std::size_t n = 0; n < N; ++n) credit[n] += shares[n];
        const std::size_t winner = argmax_lowest(credit);
        credit[winner] -= total;
        out.slots.push_back(static_cast<SensorId>(winner + 1));
    }
    return out;
}

std::vector<double> rate_shares(const RabConfig& config) {
    std::vector<double> shares(static_cast<std::size_t>(config.sensor_count()));
    for (SensorId n = 1; n <= config.sensor_count(); ++n) {
        const auto& s = config.sensor(n);
        shares[static_cast<std::size_t>(n - 1)] = s.qbar * s.h;
    }
    return shares;
}

std::vector<double> rate_delay_shares(const RabConfig& config) {
    auto shares = rate_shares(config);
    for (SensorId n = 1; n <= config.sensor_count(); ++n) {
        const double total = config.sensor(n).profile.total();
        shares[static_cast<std::size_t>(n - 1)] *= static_cast<double>(config.slots()) / total;
    }
    return shares;
}

Allocation rd_round_robin(const RabConfig& config) {
    return r_round_robin(config, rate_delay_shares(config));
}

}  // namespace dara
