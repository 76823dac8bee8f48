#include <doctest.h>

#include "oracles.hpp"
#include "planks/convex.hpp"
#include "planks/rng.hpp"

using namespace planks;

namespace {

ConvexRegion ball_with(std::initializer_list<Halfspace> constraints) {
    ConvexRegion r;
    for (const Halfspace& h : constraints) r = r.with_constraint(h);
    return r;
}

// Random test region: the ball cut by up to three halfspaces, kept fat enough
// to stay clearly nonempty.
ConvexRegion random_region(Rng& rng, int max_constraints) {
    ConvexRegion r;
    const int m = 1 + static_cast<int>(rng.uniform() * max_constraints);
    for (int j = 0; j < m; ++j) {
        r = r.with_constraint({UnitVector(sample_unit_sphere(rng)), 0.1 + 0.7 * rng.uniform()});
    }
    return r;
}

}  // namespace

TEST_CASE("projection onto the ball is radial") {
    ConvexRegion ball;
    const auto r = project_region({0, 0, 2}, ball, 1e-12);
    CHECK(r.report.converged);
    CHECK(norm(r.point - Vec3{0, 0, 1}) <= 1e-9);
}

TEST_CASE("projection onto a half-ball hits the face center") {
    const ConvexRegion half = ball_with({{UnitVector(0, 0, 1), 0.0}});
    const auto r = project_region({0, 0, 2}, half, 1e-12);
    CHECK(r.report.converged);
    CHECK(norm(r.point - Vec3{0, 0, 0}) <= 1e-9);
}

TEST_CASE("projection above a flat face matches the closed form and the sampling oracle") {
    const ConvexRegion k = ball_with({{UnitVector(0, 0, 1), 0.8}});
    const Vec3 p{0.3, 0.4, 1.7};
    const auto r = project_region(p, k, 1e-12);
    CHECK(r.report.converged);
    // Closed form: the foot (0.3, 0.4, 0.8) lies inside the ball.
    CHECK(norm(r.point - Vec3{0.3, 0.4, 0.8}) <= 1e-9);

    const Vec3 q = oracles::projection_oracle(p, k, 1000000, 99);
    CHECK(std::abs(norm(p - r.point) - norm(p - q)) <= 1e-2);
}

TEST_CASE("distance to region reference values") {
    const ConvexRegion k = ball_with({{UnitVector(0, 0, 1), 0.8}});
    CHECK(distance_to_region({0, 0, 1.95}, k, 1e-12) == doctest::Approx(1.15).epsilon(1e-9));
    ConvexRegion ball;
    CHECK(distance_to_region({0, 0, 0}, ball) == doctest::Approx(0.0));
    CHECK(distance_to_region({0, 0, -3}, ball) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("projection optimality against feasible samples") {
    Rng rng(123);
    for (int it = 0; it < 100; ++it) {
        const ConvexRegion k = random_region(rng, 3);
        const Vec3 p = sample_unit_ball(rng) * 2.5;
        const auto proj = project_region(p, k, 1e-10);
        REQUIRE(proj.report.converged);
        const double d = norm(p - proj.point);
        Rng sampler(substream_seed(1000, it));
        for (int i = 0; i < 100000; ++i) {
            const Vec3 q = sample_unit_ball(sampler);
            if (!k.contains(q, 0.0)) continue;
            CHECK(norm(p - q) >= d - 1e-6);
        }
    }
}

TEST_CASE("support of the ball") {
    ConvexRegion ball;
    const auto s = support_value(ball, UnitVector(0, 0, 1), 1e-10);
    CHECK(s.report.converged);
    CHECK(s.value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(norm(s.witness - Vec3{0, 0, 1}) <= 1e-4);
}

TEST_CASE("support with the cut active") {
    const ConvexRegion k = ball_with({{UnitVector(0, 0, 1), 0.5}});
    const auto s = support_value(k, UnitVector(0, 0, 1), 1e-10);
    CHECK(s.value == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("support against the boundary-sampling oracle") {
    const ConvexRegion k =
        ball_with({{UnitVector(0, 0, 1), 0.5}, {UnitVector(1, 0, 0), 0.5}});
    const UnitVector c(1, 0, 1);
    const auto s = support_value(k, c, 1e-10);
    const double reference = oracles::support_oracle(k, c, 1000000, 7);
    CHECK(std::abs(s.value - reference) <= 1e-3);
    // The maximizing face is the segment x = z = 0.5; the exact value is 1/sqrt(2).
    CHECK(s.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-7));
}

TEST_CASE("support never increases when a constraint is added") {
    Rng rng(17);
    for (int it = 0; it < 50; ++it) {
        const ConvexRegion k = random_region(rng, 2);
        const UnitVector c(sample_unit_sphere(rng));
        const double before = support_value(k, c, 1e-9).value;
        const ConvexRegion cut =
            k.with_constraint({UnitVector(sample_unit_sphere(rng)), 0.2 + 0.6 * rng.uniform()});
        const double after = support_value(cut, c, 1e-9).value;
        CHECK(after <= before + 1e-7);
    }
}

TEST_CASE("cutting at the support by a width shifts the support by exactly that width") {
    Rng rng(29);
    int exercised = 0;
    for (int it = 0; it < 60; ++it) {
        const ConvexRegion k = random_region(rng, 3);
        const UnitVector n(sample_unit_sphere(rng));
        const double width = 0.05 + 0.2 * rng.uniform();
        const double h = support_value(k, n, 1e-9).value;
        const ConvexRegion cut = k.with_constraint({n, h - width});
        if (inner_radius(cut).value <= 1e-6) continue;
        ++exercised;
        const double h2 = support_value(cut, n, 1e-9).value;
        CHECK(std::abs(h2 - (h - width)) <= 2e-9);
    }
    CHECK(exercised > 20);
}

TEST_CASE("inner radius reference values") {
    ConvexRegion ball;
    CHECK(inner_radius(ball).value == doctest::Approx(1.0).epsilon(1e-9));

    const ConvexRegion point = ball_with({{UnitVector(0, 0, 1), -1.0}});
    CHECK(std::abs(inner_radius(point).value) <= 1e-9);

    const ConvexRegion slab =
        ball_with({{UnitVector(0, 0, 1), 0.6}, {UnitVector(0, 0, -1), -0.2}});
    CHECK(inner_radius(slab).value == doctest::Approx(0.2).epsilon(1e-6));
    CHECK(oracles::inner_radius_grid_oracle(slab) == doctest::Approx(0.2).epsilon(1e-4));
}

TEST_CASE("inner radius of a single cut is half the cap height plus the rest") {
    for (double t : {-0.5, 0.0, 0.5}) {
        const ConvexRegion k = ball_with({{UnitVector(0, 0, 1), t}});
        CHECK(inner_radius(k).value == doctest::Approx((1.0 + t) / 2.0).epsilon(1e-6));
        CHECK(oracles::inner_radius_grid_oracle(k) ==
              doctest::Approx((1.0 + t) / 2.0).epsilon(1e-4));
    }
}

TEST_CASE("emptiness surrogate semantics") {
    CHECK(is_empty(ball_with({{UnitVector(0, 0, 1), -1.5}})));
    CHECK(is_empty(ball_with({{UnitVector(0, 0, 1), -1.0}})));  // single point
    CHECK_FALSE(is_empty(ball_with({{UnitVector(0, 0, 1), 0.99}})));
}

TEST_CASE("parallel body support exceeds region support by one") {
    Rng rng(31);
    for (int it = 0; it < 5; ++it) {
        const ConvexRegion k = random_region(rng, 2);
        const UnitVector c(sample_unit_sphere(rng));
        const double h = support_value(k, c, 1e-9).value;
        // Maximize x.c over sampled members of B(K).
        double best = -10.0;
        Rng sampler(substream_seed(42, it));
        for (int i = 0; i < 200000; ++i) {
            const Vec3 p = sample_unit_ball(sampler) * 2.0;
            if (distance_to_region(p, k, 1e-7, 20000) <= 1.0) best = std::max(best, dot(p, c.vec()));
        }
        CHECK(best <= h + 1.0 + 1e-6);
        CHECK(best >= h + 1.0 - 0.05);
    }
}
