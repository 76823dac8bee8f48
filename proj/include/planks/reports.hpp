#pragma once

#include <cstdint>

namespace planks {

struct ConvergenceReport {
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

/// Monte Carlo volume estimate. std_error is the binomial error scaled by the
/// reference sampling volume: V_ref * sqrt(p (1 - p) / samples).
struct VolumeEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

}  // namespace planks
