#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace planks {

inline constexpr double kPi = std::numbers::pi;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vec3 operator*(double s, const Vec3& a) { return a * s; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3& operator+=(Vec3& a, const Vec3& b) { a.x += b.x; a.y += b.y; a.z += b.z; return a; }
inline Vec3& operator-=(Vec3& a, const Vec3& b) { a.x -= b.x; a.y -= b.y; a.z -= b.z; return a; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

/// Direction on the unit sphere. Construction normalizes; the zero vector is
/// rejected rather than silently mapped anywhere.
class UnitVector {
  public:
    UnitVector() : v_{0.0, 0.0, 1.0} {}
    UnitVector(double x, double y, double z) : UnitVector(Vec3{x, y, z}) {}
    explicit UnitVector(const Vec3& v) {
        const double n = norm(v);
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw std::invalid_argument("UnitVector: zero or non-finite input");
        }
        v_ = v * (1.0 / n);
    }

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

    friend bool operator==(const UnitVector& a, const UnitVector& b) { return a.v_ == b.v_; }

  private:
    Vec3 v_;
};

/// Angle in [0, pi] between two directions.
inline double angular_distance(const UnitVector& a, const UnitVector& b) {
    const double d = dot(a.vec(), b.vec());
    return std::acos(d < -1.0 ? -1.0 : (d > 1.0 ? 1.0 : d));
}

/// Some orthonormal basis {u, v} of the plane through the origin with the
/// given normal. Deterministic in the input.
inline void tangent_basis(const UnitVector& n, Vec3& u, Vec3& v) {
    const Vec3 seed = std::abs(n.x()) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    Vec3 t = cross(n.vec(), seed);
    u = t * (1.0 / norm(t));
    v = cross(n.vec(), u);
}

}  // namespace planks
