#include "planks/measure.hpp"

#include <cmath>

#include "planks/parallel.hpp"
#include "planks/rng.hpp"

namespace planks {

namespace {

constexpr std::int64_t kBlockSamples = 1 << 14;
constexpr double kBallVolume = 4.0 * kPi / 3.0;

VolumeEstimate from_counts(double ref_volume, std::int64_t accepted, std::int64_t samples,
                           std::uint64_t seed) {
    const double p = static_cast<double>(accepted) / static_cast<double>(samples);
    VolumeEstimate est;
    est.mean = ref_volume * p;
    est.std_error = ref_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    return est;
}

// Counts accepted samples over per-block substreams; the total is invariant
// to the worker count because block b always consumes stream (seed, b).
template <typename AcceptFn>
std::int64_t count_accepted(std::int64_t samples, std::uint64_t seed, double radius,
                            const AcceptFn& accept) {
    const std::int64_t blocks = (samples + kBlockSamples - 1) / kBlockSamples;
    std::vector<std::int64_t> counts(blocks, 0);
    parallel_for(blocks, [&](std::int64_t b) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(b)));
        const std::int64_t n =
            std::min(kBlockSamples, samples - b * kBlockSamples);
        std::int64_t c = 0;
        for (std::int64_t i = 0; i < n; ++i) {
            if (accept(sample_unit_ball(rng) * radius)) ++c;
        }
        counts[b] = c;
    });
    std::int64_t total = 0;
    for (std::int64_t c : counts) total += c;
    return total;
}

// Distance-to-region test with cheap certificates on both sides: membership
// in K accepts immediately, and the largest single-set violation is a lower
// bound on the distance, so values beyond 1+tol reject without projecting.
bool in_parallel_body(const Vec3& p, const ConvexRegion& k, double tol) {
    double worst = norm(p) - 1.0;
    for (const Halfspace& h : k.constraints()) {
        worst = std::max(worst, dot(p, h.normal.vec()) - h.offset);
    }
    if (worst <= tol) return true;
    if (worst > 1.0 + tol) return false;
    // Degenerate (measure-zero) regions project slowly; the capped budget
    // leaves a distance error well inside the Monte Carlo noise.
    return distance_to_region(p, k, tol, 4000) <= 1.0 + tol;
}

}  // namespace

VolumeEstimate mc_volume(const ConvexRegion& k, std::int64_t samples, std::uint64_t seed) {
    const std::int64_t accepted = count_accepted(
        samples, seed, 1.0, [&](const Vec3& p) { return k.contains(p, 0.0); });
    return from_counts(kBallVolume, accepted, samples, seed);
}

VolumeEstimate mc_parallel_volume(const ConvexRegion& k, std::int64_t samples, std::uint64_t seed,
                                  double tol) {
    const std::int64_t accepted = count_accepted(
        samples, seed, 2.0, [&](const Vec3& p) { return in_parallel_body(p, k, tol); });
    return from_counts(8.0 * kBallVolume, accepted, samples, seed);
}

double verify_cover(const Instance& instance, const CoverCertificate& cert, std::int64_t samples,
                    std::uint64_t seed) {
    (void)instance;
    const auto& placements = cert.placements;
    const std::int64_t uncovered = count_accepted(
        samples, seed, 1.0, [&](const Vec3& p) {
            for (const PlacedPlank& s : placements) {
                const double t = dot(p, s.normal.vec());
                if (t >= s.lower_offset && t <= s.upper_offset) return false;
            }
            return true;
        });
    return static_cast<double>(uncovered) / static_cast<double>(samples);
}

std::pair<PlacedPlank, Halfspace> shadow_plank(const ConvexRegion& k, const Plank& plank) {
    const SupportResult s = support_value(k, plank.normal);
    PlacedPlank shadow;
    shadow.normal = plank.normal;
    shadow.upper_offset = s.value + 1.0;  // support of the parallel body
    shadow.lower_offset = shadow.upper_offset - plank.width;
    // Upper halfspace { x . n >= lower } as { x . (-n) <= -lower }.
    const Halfspace upper{UnitVector(-plank.normal.vec()), -shadow.lower_offset};
    return {shadow, upper};
}

ParallelVolumeTracker::ParallelVolumeTracker(std::int64_t samples, std::uint64_t seed, double tol)
    : samples_(samples), seed_(seed), tol_(tol) {
    points_.resize(samples);
    rejected_.assign(samples, 0);
    const std::int64_t blocks = (samples + kBlockSamples - 1) / kBlockSamples;
    parallel_for(blocks, [&](std::int64_t b) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(b)));
        const std::int64_t n = std::min(kBlockSamples, samples - b * kBlockSamples);
        for (std::int64_t i = 0; i < n; ++i) {
            points_[b * kBlockSamples + i] = sample_unit_ball(rng) * 2.0;
        }
    });
}

VolumeEstimate ParallelVolumeTracker::estimate(const ConvexRegion& k) {
    const std::int64_t blocks = (samples_ + kBlockSamples - 1) / kBlockSamples;
    std::vector<std::int64_t> counts(blocks, 0);
    parallel_for(blocks, [&](std::int64_t b) {
        const std::int64_t n = std::min(kBlockSamples, samples_ - b * kBlockSamples);
        std::int64_t c = 0;
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int64_t idx = b * kBlockSamples + i;
            if (rejected_[idx]) continue;
            if (in_parallel_body(points_[idx], k, tol_)) {
                ++c;
            } else {
                rejected_[idx] = 1;  // B(K) only shrinks along the sequence
            }
        }
        counts[b] = c;
    });
    std::int64_t total = 0;
    for (std::int64_t c : counts) total += c;
    return from_counts(8.0 * kBallVolume, total, samples_, seed_);
}

}  // namespace planks
