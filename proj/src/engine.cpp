#include "planks/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "planks/measure.hpp"
#include "planks/ordering.hpp"
#include "planks/rng.hpp"

namespace planks {

namespace {

// Uniform-ish sampler inside K: hit-and-run chain started at an interior
// point. Any distribution supported on K works for the convexity probe.
class HitAndRun {
  public:
    HitAndRun(const ConvexRegion& k, const Vec3& interior, std::uint64_t seed)
        : k_(k), x_(interior), rng_(seed) {
        for (int i = 0; i < 32; ++i) step();  // burn-in
    }

    Vec3 next() {
        step();
        return x_;
    }

  private:
    void step() {
        const Vec3 d = sample_unit_sphere(rng_);
        // Chord of K through x_ along d: the ball gives a quadratic, each
        // halfspace a linear bound.
        const double b = dot(x_, d);
        const double c = norm2(x_) - 1.0;
        const double disc = b * b - c;
        if (disc <= 0.0) return;
        double t_lo = -b - std::sqrt(disc);
        double t_hi = -b + std::sqrt(disc);
        for (const Halfspace& h : k_.constraints()) {
            const double dn = dot(d, h.normal.vec());
            const double room = h.offset - dot(x_, h.normal.vec());
            if (std::abs(dn) < 1e-15) {
                if (room < 0.0) return;  // outside this plane; keep position
            } else if (dn > 0.0) {
                t_hi = std::min(t_hi, room / dn);
            } else {
                t_lo = std::max(t_lo, room / dn);
            }
        }
        if (t_lo > t_hi) return;
        x_ += d * (t_lo + rng_.uniform() * (t_hi - t_lo));
    }

    const ConvexRegion& k_;
    Vec3 x_;
    Rng rng_;
};

// Midpoints of random point pairs inside K must lie in K; a violation would
// witness a disconnected (non-convex) remainder.
int convexity_probe_failures(const ConvexRegion& k, const Vec3& interior, int pairs,
                             std::uint64_t seed) {
    HitAndRun sampler(k, interior, seed);
    int failures = 0;
    for (int i = 0; i < pairs; ++i) {
        const Vec3 a = sampler.next();
        const Vec3 b = sampler.next();
        if (!k.contains((a + b) * 0.5, 1e-9)) ++failures;
    }
    return failures;
}

}  // namespace

std::pair<PlacedPlank, ConvexRegion> place_next(const ConvexRegion& k, const Plank& plank,
                                                double tol_support) {
    const SupportResult s = support_value(k, plank.normal, tol_support);
    PlacedPlank placed;
    placed.normal = plank.normal;
    placed.upper_offset = s.value;
    placed.lower_offset = s.value - plank.width;
    return {placed, k.with_constraint({plank.normal, placed.lower_offset})};
}

CoverCertificate run_cover(const Instance& instance, const EngineConfig& config) {
    instance.validate();
    if (config.max_planks < 1) throw std::invalid_argument("EngineConfig: max_planks must be >= 1");
    if (!(config.tol_support > 0.0) || !(config.tol_empty > 0.0)) {
        throw std::invalid_argument("EngineConfig: tolerances must be positive");
    }
    const int k = instance.size();

    CoverCertificate cert;
    cert.ordering.resize(k);
    std::iota(cert.ordering.begin(), cert.ordering.end(), 0);
    if (config.mode == CoverMode::kChunked) {
        std::vector<UnitVector> normals;
        normals.reserve(k);
        for (const Plank& p : instance.planks) normals.push_back(p.normal);
        const double theta =
            config.theta > 0.0 ? config.theta : default_theta(k, instance.min_width());
        cert.ordering = extract_order(build_angle_graph(normals, theta)).ordering;
    }

    const int cadence = std::max(1, k / 100);
    const std::uint64_t vol_region_seed = substream_seed(config.seed, 0xA0);
    const std::uint64_t vol_parallel_seed = substream_seed(config.seed, 0xB0);
    const std::uint64_t probe_seed = substream_seed(config.seed, 0xC0);

    std::optional<ParallelVolumeTracker> tracker;
    ConvexRegion region;
    if (config.record_volumes) {
        tracker.emplace(config.volume_samples, vol_parallel_seed);
        cert.initial_vol_region = mc_volume(region, config.volume_samples, vol_region_seed);
        cert.initial_vol_parallel = tracker->estimate(region);
    }
    if (config.probe_convexity) cert.probe_failures = 0;

    Vec3 center{};  // tracked interior point of the shrinking remainder
    Vec3 witness{0.0, 0.0, 1.0};
    bool have_witness = false;
    bool empty_now = false;

    const int limit = std::min(k, config.max_planks);
    for (int i = 0; i < limit; ++i) {
        const Plank& plank = instance.planks[cert.ordering[i]];

        SupportResult s;
        try {
            s = support_value(region, plank.normal, config.tol_support, 100000,
                              have_witness ? &witness : nullptr);
        } catch (const EmptyRegionError&) {
            cert.error = "support feasibility lost at step " + std::to_string(i + 1);
            break;
        }
        if (!s.report.converged) {
            cert.error = "support ascent did not converge at step " + std::to_string(i + 1);
            break;
        }
        witness = s.witness;
        have_witness = true;

        PlacedPlank placed;
        placed.normal = plank.normal;
        placed.upper_offset = s.value;
        placed.lower_offset = s.value - plank.width;
        region = region.with_constraint({plank.normal, placed.lower_offset});
        cert.placements.push_back(placed);
        ++cert.planks_used;

        StepRecord rec;
        rec.step = cert.planks_used;
        rec.plank_index = cert.ordering[i];
        rec.support_h = s.value;
        rec.constraint_count = region.constraint_count();

        // Emptiness, cheap path first: a tracked interior point with positive
        // slack certifies nonemptiness without the full inner-radius solve.
        center = improve_center(region, center);
        const double g = inner_slack(region, center);
        if (g >= 10.0 * config.tol_empty) {
            empty_now = false;
        } else {
            InnerRadiusResult ir = inner_radius(region, &center);
            center = ir.center;
            empty_now = ir.value < config.tol_empty;
        }

        const bool recorded = (cert.planks_used % cadence == 0) || empty_now || i + 1 == limit;
        if (recorded) {
            if (config.record_volumes) {
                rec.vol_region = mc_volume(region, config.volume_samples, vol_region_seed);
                rec.vol_parallel = tracker->estimate(region);
                rec.empty_after = empty_now;
            }
            if (config.probe_convexity && !empty_now) {
                *cert.probe_failures += convexity_probe_failures(
                    region, center, config.probe_pairs,
                    substream_seed(probe_seed, static_cast<std::uint64_t>(cert.planks_used)));
            }
        }
        cert.steps.push_back(rec);

        if (empty_now) break;
    }

    if (cert.error.empty()) {
        cert.covered = empty_now || is_empty(region, config.tol_empty, &center);
    } else {
        cert.covered = false;
    }
    return cert;
}

StaticCheckResult verify_certificate_static(const Instance& instance,
                                            const CoverCertificate& cert, double tol_support) {
    StaticCheckResult result;
    const int k = instance.size();

    if (static_cast<int>(cert.ordering.size()) != k) {
        result.reasons.push_back("ordering length mismatch");
        return result;
    }
    std::vector<bool> seen(k, false);
    for (int idx : cert.ordering) {
        if (idx < 0 || idx >= k || seen[idx]) {
            result.reasons.push_back("ordering is not a permutation");
            return result;
        }
        seen[idx] = true;
    }
    if (cert.planks_used != static_cast<int>(cert.placements.size()) || cert.planks_used > k) {
        result.reasons.push_back("planks_used mismatch");
        return result;
    }

    ConvexRegion region;
    Vec3 witness{0.0, 0.0, 1.0};
    bool have_witness = false;
    for (int i = 0; i < cert.planks_used; ++i) {
        const Plank& plank = instance.planks[cert.ordering[i]];
        const PlacedPlank& placed = cert.placements[i];
        const std::string at = " at step " + std::to_string(i + 1);

        if (!(placed.normal == plank.normal)) {
            result.reasons.push_back("normal mismatch" + at);
            continue;
        }
        if (std::abs(placed.width() - plank.width) > 1e-9) {
            result.reasons.push_back("width mismatch" + at);
        }

        SupportResult s;
        try {
            s = support_value(region, plank.normal, tol_support, 100000,
                              have_witness ? &witness : nullptr);
        } catch (const EmptyRegionError&) {
            result.reasons.push_back("region already empty" + at);
            break;
        }
        witness = s.witness;
        have_witness = true;
        if (std::abs(s.value - placed.upper_offset) > 2.0 * tol_support) {
            result.reasons.push_back("tangency violation" + at);
        }
        region = region.with_constraint({plank.normal, placed.lower_offset});
    }

    result.ok = result.reasons.empty();
    return result;
}

}  // namespace planks
