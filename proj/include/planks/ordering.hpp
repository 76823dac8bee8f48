#pragma once

#include <vector>

#include "planks/geometry.hpp"

namespace planks {

/// Graph on plank indices; (u, v) is an edge iff the angle between the two
/// normals is strictly less than theta.
struct AngleGraph {
    int vertex_count = 0;
    double theta = 0.0;
    std::vector<std::vector<int>> adjacency;  // sorted, simple, undirected
};

/// Near-parallel group emitted by one extraction step: the chosen center
/// first, then its surviving neighbors in ascending index order. All pairwise
/// angles within a chunk are below 2*theta.
struct Chunk {
    std::vector<int> indices;
};

struct ExtractStep {
    int vertex = 0;
    int degree = 0;
    double average_degree = 0.0;
};

struct ExtractResult {
    std::vector<int> ordering;
    std::vector<Chunk> chunks;
    std::vector<ExtractStep> trace;
};

/// alpha = 1/6 + beta/3, the exponent balancing the two covering regimes.
double compute_alpha(double beta);

/// Threshold angle for an instance of k planks of width epsilon:
/// epsilon^alpha with beta read off from k = epsilon^(-beta), clamped to
/// [1, 2] to guard degenerate instances.
double default_theta(int k, double epsilon);

AngleGraph build_angle_graph(const std::vector<UnitVector>& normals, double theta);

// Both construction paths; the grid bucketing must produce the identical
// edge set and exists only to avoid the quadratic scan on large inputs.
AngleGraph build_angle_graph_exact(const std::vector<UnitVector>& normals, double theta);
AngleGraph build_angle_graph_grid(const std::vector<UnitVector>& normals, double theta);

/// Repeatedly removes a maximum-degree vertex (lowest index on ties; its
/// degree is then at least the average) together with its neighbors, until
/// the graph is empty. The concatenated chunks form the ordering.
ExtractResult extract_order(const AngleGraph& graph);

}  // namespace planks
