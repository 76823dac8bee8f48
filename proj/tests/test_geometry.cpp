#include <doctest.h>

#include "planks/geometry.hpp"
#include "planks/region.hpp"
#include "planks/rng.hpp"

using namespace planks;

TEST_CASE("unit vector normalization") {
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        const Vec3 raw = sample_unit_sphere(rng) * (0.001 + 100.0 * rng.uniform());
        const UnitVector u(raw);
        CHECK(std::abs(norm(u.vec()) - 1.0) <= 1e-12);
    }
    CHECK_THROWS_AS(UnitVector(0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("angular distance reference values") {
    const UnitVector up(0, 0, 1);
    CHECK(angular_distance(up, up) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(angular_distance(up, UnitVector(1, 0, 0)) == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(angular_distance(up, UnitVector(0, 0, -1)) == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("angular distance symmetry and triangle inequality") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const UnitVector a(sample_unit_sphere(rng));
        const UnitVector b(sample_unit_sphere(rng));
        const UnitVector c(sample_unit_sphere(rng));
        CHECK(angular_distance(a, b) == doctest::Approx(angular_distance(b, a)).epsilon(1e-12));
        CHECK(angular_distance(a, b) + angular_distance(b, c) >=
              angular_distance(a, c) - 1e-12);
    }
}

TEST_CASE("region membership") {
    ConvexRegion ball;
    CHECK(region_contains(ball, {0, 0, 0.5}, 0.0));
    CHECK(region_contains(ball, {0, 0, 1.000000001}, 1e-6));
    CHECK_FALSE(region_contains(ball, {0, 0, 1.1}, 1e-6));

    const ConvexRegion cut = ball.with_constraint({UnitVector(0, 0, 1), 0.4});
    CHECK_FALSE(region_contains(cut, {0, 0, 0.5}, 0.0));
    CHECK(region_contains(cut, {0, 0, 0.39}, 0.0));
}

TEST_CASE("constraints that cannot cut the ball are dropped") {
    ConvexRegion ball;
    const ConvexRegion same = ball.with_constraint({UnitVector(0, 1, 0), 1.5});
    CHECK(same.constraint_count() == 0);

    const ConvexRegion cut = ball.with_constraint({UnitVector(0, 0, 1), 0.3});
    Rng rng(3);
    for (int i = 0; i < 10000; ++i) {
        const Vec3 p = sample_unit_ball(rng) * 1.05;
        CHECK(region_contains(cut, p, 1e-12) ==
              (norm(p) <= 1.0 + 1e-12 && p.z <= 0.3 + 1e-12));
    }
}

TEST_CASE("same-normal constraints keep the smallest offset") {
    ConvexRegion r;
    const UnitVector n(0, 0, 1);
    r = r.with_constraint({n, 0.8});
    r = r.with_constraint({n, 0.5});
    r = r.with_constraint({n, 0.7});
    CHECK(r.constraint_count() == 1);
    CHECK(r.constraints()[0].offset == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("plank width validation") {
    CHECK_THROWS_AS(Plank(UnitVector(0, 0, 1), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Plank(UnitVector(0, 0, 1), -0.1), std::invalid_argument);
    CHECK(Plank(UnitVector(0, 0, 1), 2.5).oversized());
    CHECK_FALSE(Plank(UnitVector(0, 0, 1), 0.2).oversized());
}
