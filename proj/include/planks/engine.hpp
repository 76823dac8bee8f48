#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "planks/certificate.hpp"
#include "planks/convex.hpp"
#include "planks/instance.hpp"

namespace planks {

enum class CoverMode { kChunked, kFixedOrder };

struct EngineConfig {
    CoverMode mode = CoverMode::kChunked;
    double tol_support = 1e-9;
    double tol_empty = 1e-9;
    int max_planks = std::numeric_limits<int>::max();
    bool record_volumes = false;
    std::int64_t volume_samples = 10000;
    bool probe_convexity = false;  // midpoint connectedness probe at recorded steps
    int probe_pairs = 1000;
    std::uint64_t seed = 0;  // stream seed for volume recording and probes
    double theta = 0.0;      // chunking angle; 0 selects the epsilon-based default
};

/// One greedy step: translate the plank so its upper plane supports K from
/// above, then cut. The successor stays convex, so removing the slab never
/// disconnects the remainder.
std::pair<PlacedPlank, ConvexRegion> place_next(const ConvexRegion& k, const Plank& plank,
                                                double tol_support = 1e-9);

/// Runs the full greedy covering in the configured order, stopping at the
/// first (effectively) empty remainder. A nonconvergent step aborts with a
/// partial certificate carrying an error annotation.
CoverCertificate run_cover(const Instance& instance, const EngineConfig& config);

struct StaticCheckResult {
    bool ok = false;
    std::vector<std::string> reasons;
};

/// Structural certificate audit: permutation validity, normal and width
/// preservation, and tangency of every placement against the reconstructed
/// predecessor region.
StaticCheckResult verify_certificate_static(const Instance& instance,
                                            const CoverCertificate& cert,
                                            double tol_support = 1e-9);

}  // namespace planks
