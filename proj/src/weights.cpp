#include "dara/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "dara/error.hpp"

namespace dara {

WeightProfile exponential_profile(double delta, int slots) {
    if (!(delta >= 0.0 && delta < 1.0)) {
        throw Error(ErrorCode::DeltaOutOfRange, "delta must lie in [0,1), got " + std::to_string(delta));
    }
    if (slots < 1) throw Error(ErrorCode::LengthMismatch, "profile needs at least one slot");
    std::vector<double> w(static_cast<std::size_t>(slots));
    w[0] = 1.0;
    for (std::size_t t = 1; t < w.size(); ++t) w[t] = w[t - 1] * delta;
    return WeightProfile::exponential(std::move(w), delta);
}

WeightProfile profile_from_histogram(const DeadlineHistogram& hist) {
    const auto& bytes = hist.bytes_by_deadline;
    if (bytes.empty()) throw Error(ErrorCode::EmptyHistogram, "histogram has no slots");
    for (const double b : bytes) {
        if (!std::isfinite(b) || b < 0.0) {
            throw Error(ErrorCode::InvalidArgument, "histogram entries must be finite and non-negative");
        }
    }
    std::vector<double> survival(bytes.size());
    double acc = 0.0;
    for (std::size_t i = bytes.size(); i-- > 0;) {
        acc += bytes[i];
        survival[i] = acc;
    }
    const double head = survival.front();
    if (head <= 0.0) throw Error(ErrorCode::EmptyHistogram, "histogram is all zeros");
    for (double& s : survival) s /= head;
    // Suffix sums can only shrink, but dividing may still round one ulp up.
    for (std::size_t i = 1; i < survival.size(); ++i) survival[i] = std::min(survival[i], survival[i - 1]);
    survival.front() = 1.0;
    return WeightProfile::empirical(std::move(survival));
}

double fit_exponential(const WeightProfile& profile) {
    const auto w = profile.weights();
    constexpr double kMaxDelta = 1.0 - 1e-12;
    if (w.size() < 2) throw Error(ErrorCode::DegenerateProfile, "fit needs at least two slots");

    double num = 0.0;
    double den = 0.0;
    int positive = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!(w[k] >= std::numeric_limits<double>::min())) continue;
        ++positive;
        const auto kd = static_cast<double>(k);
        num += kd * std::log(w[k]);
        den += kd * kd;
    }
    if (positive < 2) {
        if (profile.delta() == 0.0) return 0.0;
        throw Error(ErrorCode::DegenerateProfile, "fewer than two positive weights");
    }
    return std::clamp(std::exp(num / den), 0.0, kMaxDelta);
}

DeadlineHistogram read_histogram_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::ConfigError, "histogram CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "slot,bytes") throw Error(ErrorCode::ConfigError, "expected header 'slot,bytes'");

    DeadlineHistogram hist;
    int expected_slot = 1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::ConfigError, "malformed row: " + line);
        int slot = 0;
        double bytes = 0.0;
        try {
            std::size_t used = 0;
            slot = std::stoi(line.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument("slot");
            const std::string rest = line.substr(comma + 1);
            bytes = std::stod(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("bytes");
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::ConfigError, "malformed row: " + line);
        }
        if (slot != expected_slot) {
            throw Error(ErrorCode::ConfigError, "slots must be contiguous from 1; got " + std::to_string(slot));
        }
        ++expected_slot;
        hist.bytes_by_deadline.push_back(bytes);
    }
    if (hist.bytes_by_deadline.empty()) throw Error(ErrorCode::ConfigError, "histogram CSV has no rows");
    return hist;
}

DeadlineHistogram read_histogram_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + path.string());
    return read_histogram_csv(in);
}

}  // namespace dara
