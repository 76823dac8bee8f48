#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planks/region.hpp"
#include "planks/reports.hpp"

namespace planks {

/// One placement step. Volume estimates and the emptiness flag are present
/// only on recorded steps (volume recording is sampled, it dominates runtime).
struct StepRecord {
    int step = 0;         // 1-based placement counter
    int plank_index = 0;  // index into the instance's plank list
    double support_h = 0.0;
    int constraint_count = 0;
    std::optional<VolumeEstimate> vol_region;
    std::optional<VolumeEstimate> vol_parallel;
    std::optional<bool> empty_after;
};

/// Output of a covering run: the processing order (a permutation of all plank
/// indices, even when the run stops early), the translates actually placed,
/// and per-step metrics sufficient to reconstruct every intermediate region.
struct CoverCertificate {
    std::vector<int> ordering;          // full permutation of 0..k-1
    std::vector<PlacedPlank> placements;  // aligned with ordering[0..planks_used)
    std::vector<StepRecord> steps;
    bool covered = false;
    int planks_used = 0;
    std::optional<VolumeEstimate> initial_vol_region;    // Vol K_0
    std::optional<VolumeEstimate> initial_vol_parallel;  // Vol B(K_0)
    std::optional<int> probe_failures;  // convexity midpoint probe, when enabled
    std::string error;                  // nonempty iff the run aborted
};

}  // namespace planks
