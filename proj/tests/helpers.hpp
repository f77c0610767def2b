#ifndef DARA_TESTS_HELPERS_HPP
#define DARA_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "dara/model.hpp"
#include "dara/weights.hpp"

namespace dara::test {

// Block of N sensors sharing one profile, uniform alpha, coefficient-only
// differences through h.
inline RabConfig shared_profile_block(const WeightProfile& profile, int sensors, std::vector<double> h = {}) {
    std::vector<SensorSpec> specs;
    for (int n = 1; n <= sensors; ++n) {
        SensorSpec s;
        s.id = n;
        s.alpha = 1.0 / sensors;
        s.h = h.empty() ? 1.0 : h[static_cast<std::size_t>(n - 1)];
        s.profile = profile;
        specs.push_back(std::move(s));
    }
    return RabConfig(static_cast<int>(profile.size()), std::move(specs));
}

inline RabConfig exponential_block(double delta, int sensors, int slots, std::vector<double> h = {}) {
    return shared_profile_block(exponential_profile(delta, slots), sensors, std::move(h));
}

inline RabConfig block_of(std::vector<WeightProfile> profiles, std::vector<double> alpha = {}) {
    std::vector<SensorSpec> specs;
    const int n = static_cast<int>(profiles.size());
    for (int i = 0; i < n; ++i) {
        SensorSpec s;
        s.id = i + 1;
        s.alpha = alpha.empty() ? 1.0 / n : alpha[static_cast<std::size_t>(i)];
        s.profile = std::move(profiles[static_cast<std::size_t>(i)]);
        specs.push_back(std::move(s));
    }
    const int T = static_cast<int>(specs.front().profile.size());
    return RabConfig(T, std::move(specs));
}

// Uniform point on the probability simplex.
inline std::vector<double> random_simplex(std::mt19937_64& rng, int n) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> v(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& x : v) sum += (x = e(rng));
    for (double& x : v) x /= sum;
    return v;
}

}  // namespace dara::test

#endif
