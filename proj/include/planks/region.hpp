#pragma once

#include <stdexcept>
#include <vector>

#include "planks/geometry.hpp"

namespace planks {

/// Closed halfspace { x : x . normal <= offset }. With a unit normal the
/// offset is the signed distance of the boundary plane from the origin.
struct Halfspace {
    UnitVector normal;
    double offset = 0.0;
};

/// Position-free slab: two parallel planes at distance `width`, orientation
/// fixed by `normal`. Only translates along the normal are ever chosen.
struct Plank {
    UnitVector normal;
    double width = 0.0;

    Plank(const UnitVector& n, double w) : normal(n), width(w) {
        if (!(w > 0.0)) throw std::invalid_argument("Plank: width must be positive");
    }

    // Width beyond the ball diameter is legal but wasteful against B^3.
    bool oversized() const { return width > 2.0; }
};

/// A plank fixed in space: { x : lower_offset <= x . normal <= upper_offset }.
struct PlacedPlank {
    UnitVector normal;
    double lower_offset = 0.0;
    double upper_offset = 0.0;

    double width() const { return upper_offset - lower_offset; }
};

/// Intersection of the unit ball with a finite list of halfspaces. Always
/// convex, hence connected whenever nonempty. Immutable value; adding a
/// constraint yields a new region.
class ConvexRegion {
  public:
    ConvexRegion() = default;

    const std::vector<Halfspace>& constraints() const { return constraints_; }
    int constraint_count() const { return static_cast<int>(constraints_.size()); }

    bool contains(const Vec3& p, double tol) const {
        if (norm2(p) > (1.0 + tol) * (1.0 + tol)) return false;
        for (const Halfspace& h : constraints_) {
            if (dot(p, h.normal.vec()) > h.offset + tol) return false;
        }
        return true;
    }

    /// New region with one more constraint. Drops constraints that cannot cut
    /// the ball (offset >= 1) and same-normal constraints dominated by a
    /// smaller offset, so the list stays linear in the active planes.
    ConvexRegion with_constraint(const Halfspace& h) const {
        ConvexRegion r(*this);
        if (h.offset >= 1.0) return r;
        for (Halfspace& existing : r.constraints_) {
            if (existing.normal == h.normal) {
                if (h.offset < existing.offset) existing.offset = h.offset;
                return r;
            }
        }
        r.constraints_.push_back(h);
        return r;
    }

  private:
    std::vector<Halfspace> constraints_;
};

inline bool region_contains(const ConvexRegion& k, const Vec3& p, double tol) {
    return k.contains(p, tol);
}

}  // namespace planks
