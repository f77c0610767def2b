#include <algorithm>
#include <string>
#include <vector>

#include "dara/error.hpp"
#include "dara/metrics.hpp"
#include "dara/parallel.hpp"
#include "dara/policies.hpp"

namespace dara {

std::uint64_t exhaustive_size(int sensors, int slots) {
    if (sensors < 1 || slots < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sensor and one slot");
    std::uint64_t count = 1;
    for (int t = 0; t < slots; ++t) {
        count *= static_cast<std::uint64_t>(sensors);
        if (count > kExhaustiveLimit) {
            throw Error(ErrorCode::InstanceTooLarge, std::to_string(sensors) + "^" + std::to_string(slots) +
                                                         " allocations exceed the limit of " +
                                                         std::to_string(kExhaustiveLimit));
        }
    }
    return count;
}

namespace {

// Flattened weights and coefficients so the inner loop avoids id lookups.
struct Instance {
    int sensors;
    int slots;
    std::vector<double> weights;  // weights[t * sensors + n]
    std::vector<double> coeff;

    explicit Instance(const RabConfig& config)
        : sensors(config.sensor_count()),
          slots(config.slots()),
          weights(static_cast<std::size_t>(sensors) * static_cast<std::size_t>(slots)),
          coeff(static_cast<std::size_t>(sensors)) {
        for (int n = 0; n < sensors; ++n) {
            coeff[static_cast<std::size_t>(n)] = config.sensor(n + 1).utility_coefficient();
            for (int t = 0; t < slots; ++t) {
                weights[static_cast<std::size_t>(t * sensors + n)] = config.weight(n + 1, t + 1);
            }
        }
    }
};

struct Best {
    std::uint64_t index = 0;
    double value = 0.0;
    bool found = false;
};

// Scans allocations [first, last) in lexicographic order. Digits hold s(t)-1,
// slot 1 most significant.
Best scan_range(const Instance& inst, Objective objective, std::uint64_t first, std::uint64_t last) {
    Best best;
    if (first >= last) return best;
    const auto T = static_cast<std::size_t>(inst.slots);
    const auto N = static_cast<std::uint64_t>(inst.sensors);
    std::vector<int> digit(T, 0);
    std::uint64_t rest = first;
    for (std::size_t t = T; t-- > 0;) {
        digit[t] = static_cast<int>(rest % N);
        rest /= N;
    }
    std::vector<double> rate(static_cast<std::size_t>(inst.sensors));
    for (std::uint64_t idx = first; idx < last; ++idx) {
        std::fill(rate.begin(), rate.end(), 0.0);
        for (std::size_t t = 0; t < T; ++t) {
            rate[static_cast<std::size_t>(digit[t])] += inst.weights[t * N + static_cast<std::size_t>(digit[t])];
        }
        const double w = objective_from_rates(inst.coeff, rate, objective);
        if (!best.found || w > best.value) best = Best{idx, w, true};

        for (std::size_t t = T; t-- > 0;) {
            if (++digit[t] < inst.sensors) break;
            digit[t] = 0;
        }
    }
    return best;
}

ExhaustiveResult decode(const Instance& inst, const Best& best) {
    ExhaustiveResult out;
    out.value = best.value;
    out.allocation.slots.resize(static_cast<std::size_t>(inst.slots));
    std::uint64_t rest = best.index;
    for (std::size_t t = static_cast<std::size_t>(inst.slots); t-- > 0;) {
        out.allocation.slots[t] = static_cast<SensorId>(rest % static_cast<std::uint64_t>(inst.sensors)) + 1;
        rest /= static_cast<std::uint64_t>(inst.sensors);
    }
    return out;
}

}  // namespace

ExhaustiveResult optimal_exhaustive_serial(const RabConfig& config, Objective objective) {
    const std::uint64_t total = exhaustive_size(config.sensor_count(), config.slots());
    const Instance inst(config);
    return decode(inst, scan_range(inst, objective, 0, total));
}

ExhaustiveResult optimal_exhaustive(const RabConfig& config, Objective objective) {
    const std::uint64_t total = exhaustive_size(config.sensor_count(), config.slots());
    const Instance inst(config);

    std::vector<Best> partial(static_cast<std::size_t>(DARA_OMP_MAX_THREADS));
#pragma omp parallel
    {
        const auto threads = static_cast<std::uint64_t>(DARA_OMP_NUM_THREADS);
        const auto id = static_cast<std::uint64_t>(DARA_OMP_THREAD_ID);
        const std::uint64_t first = total * id / threads;
        const std::uint64_t last = total * (id + 1) / threads;
        partial[id] = scan_range(inst, objective, first, last);
    }

    // Ranges are ordered, so keeping the earlier range on equal value keeps
    // the lexicographically smallest maximizer.
    Best best;
    for (const Best& b : partial) {
        if (b.found && (!best.found || b.value > best.value)) best = b;
    }
    return decode(inst, best);
}

}  // namespace dara
