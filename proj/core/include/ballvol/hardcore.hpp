#pragma once

#include "ballvol/graph.hpp"

namespace ballvol {

// Exact hard-core quantities at fugacity lambda:
//   partition_function = sum over independent sets I of lambda^|I|
//   occupancy          = lambda * P'(lambda) / P(lambda), the mean |I|
//   log_count          = log of the number of independent sets (lambda = 1)
struct PartitionResult {
    double partition_function = 0.0;
    double occupancy = 0.0;
    double log_count = 0.0;
};

// Branch-and-memoize over induced-subgraph bitmasks with connected-component
// splitting. Exponential in the worst case; refused above 40 vertices.
PartitionResult count_independent_sets_exact(const BallGraph& g, double lambda);

struct HardcoreEstimate {
    double mean_occupancy = 0.0;
    double std_error = 0.0;
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;
    int batches = 0;
    // spread of the batch means relative to the mean, a cheap mixing signal
    double batch_spread = 0.0;
};

// Single-site heat-bath Glauber chain for the hard-core model. The first
// tenth of the trajectory is discarded; the rest is averaged in 20 batches
// and std_error is the standard error of the batch means. Requires
// steps >= 100 * N so every vertex is resampled many times.
HardcoreEstimate hardcore_estimate(const BallGraph& g, double lambda, std::uint64_t steps,
                                   std::uint64_t seed);

}  // namespace ballvol
