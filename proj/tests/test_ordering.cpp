#include <doctest.h>

#include <algorithm>

#include "planks/ordering.hpp"
#include "planks/rng.hpp"

using namespace planks;

TEST_CASE("alpha balances the two regimes") {
    CHECK(compute_alpha(1.75) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(compute_alpha(0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(compute_alpha(1.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("default theta tracks epsilon^(3/4) at the natural instance size") {
    const double eps = 0.01;
    const int k = static_cast<int>(std::ceil(std::pow(eps, -1.75)));
    CHECK(default_theta(k, eps) == doctest::Approx(std::pow(eps, 0.75)).epsilon(2e-3));
}

TEST_CASE("angle graph small cases") {
    const std::vector<UnitVector> axes{UnitVector(1, 0, 0), UnitVector(0, 1, 0),
                                       UnitVector(0, 0, 1)};
    const AngleGraph g1 = build_angle_graph(axes, 0.1);
    for (const auto& adj : g1.adjacency) CHECK(adj.empty());

    const std::vector<UnitVector> close{UnitVector(0, 0, 1),
                                        UnitVector(std::sin(0.01), 0, std::cos(0.01))};
    const AngleGraph g2 = build_angle_graph(close, 0.1);
    CHECK(g2.adjacency[0] == std::vector<int>{1});
    CHECK(g2.adjacency[1] == std::vector<int>{0});

    const std::vector<UnitVector> same(100, UnitVector(0, 0, 1));
    const AngleGraph g3 = build_angle_graph(same, 0.01);
    for (const auto& adj : g3.adjacency) CHECK(adj.size() == 99);
}

TEST_CASE("grid bucketing produces the exact edge set") {
    Rng rng(5);
    for (double theta : {0.05, 0.2, 0.7, 1.5}) {
        std::vector<UnitVector> normals;
        for (int i = 0; i < 700; ++i) normals.emplace_back(sample_unit_sphere(rng));
        const AngleGraph exact = build_angle_graph_exact(normals, theta);
        const AngleGraph grid = build_angle_graph_grid(normals, theta);
        REQUIRE(exact.adjacency.size() == grid.adjacency.size());
        for (std::size_t v = 0; v < normals.size(); ++v) {
            CHECK(exact.adjacency[v] == grid.adjacency[v]);
        }
    }
}

TEST_CASE("edgeless graph extracts singletons in index order") {
    AngleGraph g{4, 0.1, std::vector<std::vector<int>>(4)};
    const ExtractResult r = extract_order(g);
    CHECK(r.ordering == std::vector<int>{0, 1, 2, 3});
    CHECK(r.chunks.size() == 4);
}

TEST_CASE("complete triangle extracts one chunk") {
    AngleGraph g{3, 0.1, {{1, 2}, {0, 2}, {0, 1}}};
    const ExtractResult r = extract_order(g);
    CHECK(r.chunks.size() == 1);
    CHECK(r.ordering == std::vector<int>{0, 1, 2});
}

TEST_CASE("hand-simulated two-cluster extraction") {
    // Vertices 0,1,2 mutually adjacent; 3,4 adjacent to each other only.
    AngleGraph g{5, 0.1, {{1, 2}, {0, 2}, {0, 1}, {4}, {3}}};
    const ExtractResult r = extract_order(g);
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[0].vertex == 0);
    CHECK(r.trace[0].degree == 2);
    CHECK(r.trace[0].average_degree == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(r.chunks[0].indices == std::vector<int>{0, 1, 2});
    CHECK(r.trace[1].vertex == 3);
    CHECK(r.trace[1].average_degree == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.chunks[1].indices == std::vector<int>{3, 4});
}

TEST_CASE("extraction properties on random graphs") {
    Rng rng(13);
    for (int it = 0; it < 10; ++it) {
        const double theta = 0.2 + 0.5 * rng.uniform();
        std::vector<UnitVector> normals;
        const int k = 60 + static_cast<int>(rng.uniform() * 200);
        for (int i = 0; i < k; ++i) normals.emplace_back(sample_unit_sphere(rng));
        const AngleGraph g = build_angle_graph(normals, theta);
        const ExtractResult r = extract_order(g);

        std::vector<int> sorted = r.ordering;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < k; ++i) CHECK(sorted[i] == i);

        for (const ExtractStep& step : r.trace) {
            CHECK(step.degree >= step.average_degree - 1e-12);
        }
        for (const Chunk& chunk : r.chunks) {
            for (std::size_t a = 0; a < chunk.indices.size(); ++a) {
                for (std::size_t b = a + 1; b < chunk.indices.size(); ++b) {
                    CHECK(angular_distance(normals[chunk.indices[a]],
                                           normals[chunk.indices[b]]) < 2.0 * theta);
                }
            }
        }

        const ExtractResult again = extract_order(g);
        CHECK(again.ordering == r.ordering);
    }
}
