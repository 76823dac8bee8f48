#pragma once

#include <stdexcept>

#include "planks/region.hpp"
#include "planks/reports.hpp"

namespace planks {

/// Thrown when an operation requiring a nonempty region is handed a region
/// on which feasibility cannot be restored.
class EmptyRegionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ProjectionResult {
    Vec3 point;
    ConvergenceReport report;
};

struct SupportResult {
    double value = 0.0;
    Vec3 witness;
    ConvergenceReport report;
};

struct InnerRadiusResult {
    double value = 0.0;
    Vec3 center;
    ConvergenceReport report;
};

/// Nearest point of K to p, by Dykstra's cyclic projection over the ball and
/// each halfspace. Converges to the exact nearest point of the intersection;
/// report.converged is false if the iteration budget runs out first.
ProjectionResult project_region(const Vec3& p, const ConvexRegion& k, double tol = 1e-9,
                                int max_iter = 100000);

/// ||p - project_region(p, K)||; zero when p is in K.
double distance_to_region(const Vec3& p, const ConvexRegion& k, double tol = 1e-9,
                          int max_iter = 100000, ConvergenceReport* report = nullptr);

/// max { x . c : x in K } with a feasible witness, by projected gradient
/// ascent with a fixed step and tail averaging, warm-startable from a
/// previous witness.
SupportResult support_value(const ConvexRegion& k, const UnitVector& direction, double tol = 1e-9,
                            int max_iter = 100000, const Vec3* warm_start = nullptr);

/// Inscribed-ball slack at x: min(1 - ||x||, min_j (offset_j - x . n_j)).
/// Exact; any positive value certifies a nonempty interior.
double inner_slack(const ConvexRegion& k, const Vec3& x);

/// A short subgradient ascent on the slack from x; cheap re-centering for
/// callers that track an interior point across incremental cuts.
Vec3 improve_center(const ConvexRegion& k, const Vec3& x, int iters = 40);

/// max over centers x of min(1 - ||x||, min_j (offset_j - x . n_j)). Positive
/// iff K has nonempty interior; may be negative for empty regions. The value
/// returned is g evaluated at the best visited center, hence never an
/// overestimate of the true inner radius.
InnerRadiusResult inner_radius(const ConvexRegion& k, const Vec3* warm_start = nullptr);

/// Emptiness with the inner-radius surrogate: regions whose inscribed ball is
/// thinner than tol_empty count as empty, so measure-zero remainders (points,
/// disks) are treated as covered.
bool is_empty(const ConvexRegion& k, double tol_empty = 1e-9, const Vec3* warm_start = nullptr,
              Vec3* center_out = nullptr);

}  // namespace planks
