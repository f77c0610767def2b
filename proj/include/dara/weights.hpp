#ifndef DARA_WEIGHTS_HPP
#define DARA_WEIGHTS_HPP

#include <filesystem>
#include <istream>
#include <vector>

#include "dara/model.hpp"

namespace dara {

/// Bytes of bitstream whose transmission deadline falls in each slot of the
/// block (index 0 is slot 1). Deadlines past the block belong in the last entry.
struct DeadlineHistogram {
    std::vector<double> bytes_by_deadline;
};

/// w_t = delta^(t-1), built by repeated multiplication.
WeightProfile exponential_profile(double delta, int slots);

/// Normalized survival function of the deadline histogram: w_t = S(t)/S(1)
/// with S(t) the bytes still deliverable at slot t.
WeightProfile profile_from_histogram(const DeadlineHistogram& hist);

/// Least-squares fit of log w_t against (t-1) log delta, through the origin,
/// over slots whose weight is a positive normal double. Result clamped to
/// [0, 1 - 1e-12].
///
/// A profile with a single positive weight is degenerate, except when it is
/// tagged exponential with delta = 0, which is returned as-is.
double fit_exponential(const WeightProfile& profile);

/// Reads `slot,bytes` CSV (header required, slots 1..T contiguous).
/// Throws ConfigError on malformed input.
DeadlineHistogram read_histogram_csv(std::istream& in);
DeadlineHistogram read_histogram_csv(const std::filesystem::path& path);

}  // namespace dara

#endif  // DARA_WEIGHTS_HPP
