#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "planks/certificate.hpp"
#include "planks/convex.hpp"
#include "planks/instance.hpp"
#include "planks/region.hpp"
#include "planks/reports.hpp"

namespace planks {

/// Vol K by uniform sampling in the unit ball (reference volume 4*pi/3).
VolumeEstimate mc_volume(const ConvexRegion& k, std::int64_t samples, std::uint64_t seed);

/// Vol B(K), the outer parallel body at distance 1, by uniform sampling in
/// the radius-2 ball; a sample is accepted iff its distance to K is <= 1+tol.
VolumeEstimate mc_parallel_volume(const ConvexRegion& k, std::int64_t samples, std::uint64_t seed,
                                  double tol = 1e-9);

/// Fraction of uniform unit-ball samples lying in no placed slab. Zero
/// certifies coverage at the sampling resolution.
double verify_cover(const Instance& instance, const CoverCertificate& cert, std::int64_t samples,
                    std::uint64_t seed);

/// Diagnostic companion plank: the translate tangent from above to B(K)
/// (support of B(K) exceeds support of K by exactly 1), plus the upper
/// halfspace bounded by its lower plane, encoded with a flipped normal.
std::pair<PlacedPlank, Halfspace> shadow_plank(const ConvexRegion& k, const Plank& plank);

/// Incremental Vol B(K_i) estimator for a nested (shrinking) sequence of
/// regions, using one fixed sample stream. Produces the same estimate as
/// mc_parallel_volume(K_i, samples, seed) for every region in the sequence;
/// because the sample set is common, the estimates are non-increasing by
/// construction, and samples that leave B(K_i) once never return.
class ParallelVolumeTracker {
  public:
    ParallelVolumeTracker(std::int64_t samples, std::uint64_t seed, double tol = 1e-9);

    /// Precondition: k is a subset of every region previously passed.
    VolumeEstimate estimate(const ConvexRegion& k);

  private:
    std::vector<Vec3> points_;
    std::vector<char> rejected_;  // char, not vector<bool>: blocks write concurrently
    std::int64_t samples_;
    std::uint64_t seed_;
    double tol_;
};

}  // namespace planks
