#include "planks/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace planks {

double compute_alpha(double beta) { return 1.0 / 6.0 + beta / 3.0; }

double default_theta(int k, double epsilon) {
    double beta = 2.0;
    if (epsilon > 0.0 && epsilon < 1.0 && k >= 1) {
        beta = std::log(static_cast<double>(k)) / std::log(1.0 / epsilon);
    }
    beta = std::clamp(beta, 1.0, 2.0);
    return std::pow(epsilon, compute_alpha(beta));
}

AngleGraph build_angle_graph_exact(const std::vector<UnitVector>& normals, double theta) {
    const int k = static_cast<int>(normals.size());
    AngleGraph g{k, theta, std::vector<std::vector<int>>(k)};
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) {
            if (angular_distance(normals[u], normals[v]) < theta) {
                g.adjacency[u].push_back(v);
                g.adjacency[v].push_back(u);
            }
        }
    }
    return g;
}

AngleGraph build_angle_graph_grid(const std::vector<UnitVector>& normals, double theta) {
    const int k = static_cast<int>(normals.size());
    AngleGraph g{k, theta, std::vector<std::vector<int>>(k)};

    // Angle < theta implies chord < 2 sin(theta/2); bucket by a cubic grid of
    // that cell size so candidate pairs sit in the 27 surrounding cells. The
    // per-pair test is the same angular_distance call as the exact path, so
    // the edge sets match bitwise.
    const double cell = std::max(2.0 * std::sin(theta / 2.0), 1.0 / (1 << 20));
    auto key = [cell](const Vec3& p) {
        const auto ix = static_cast<std::int64_t>(std::floor(p.x / cell)) + (1 << 20);
        const auto iy = static_cast<std::int64_t>(std::floor(p.y / cell)) + (1 << 20);
        const auto iz = static_cast<std::int64_t>(std::floor(p.z / cell)) + (1 << 20);
        return (ix << 42) | (iy << 21) | iz;
    };

    std::unordered_map<std::int64_t, std::vector<int>> cells;
    cells.reserve(static_cast<std::size_t>(k) * 2);
    for (int i = 0; i < k; ++i) cells[key(normals[i].vec())].push_back(i);

    for (int u = 0; u < k; ++u) {
        const Vec3& p = normals[u].vec();
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dz = -1; dz <= 1; ++dz) {
                    const Vec3 q{p.x + dx * cell, p.y + dy * cell, p.z + dz * cell};
                    const auto it = cells.find(key(q));
                    if (it == cells.end()) continue;
                    for (int v : it->second) {
                        if (v <= u) continue;
                        if (angular_distance(normals[u], normals[v]) < theta) {
                            g.adjacency[u].push_back(v);
                            g.adjacency[v].push_back(u);
                        }
                    }
                }
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

AngleGraph build_angle_graph(const std::vector<UnitVector>& normals, double theta) {
    if (normals.size() <= 1024) return build_angle_graph_exact(normals, theta);
    return build_angle_graph_grid(normals, theta);
}

ExtractResult extract_order(const AngleGraph& graph) {
    const int k = graph.vertex_count;
    ExtractResult out;
    out.ordering.reserve(k);

    std::vector<bool> alive(k, true);
    std::vector<int> degree(k, 0);
    for (int v = 0; v < k; ++v) degree[v] = static_cast<int>(graph.adjacency[v].size());

    int remaining = k;
    long long edge_endpoints = 0;
    for (int v = 0; v < k; ++v) edge_endpoints += degree[v];

    while (remaining > 0) {
        int center = -1;
        for (int v = 0; v < k; ++v) {
            if (!alive[v]) continue;
            if (center == -1 || degree[v] > degree[center]) center = v;
        }
        const double avg = static_cast<double>(edge_endpoints) / remaining;
        out.trace.push_back({center, degree[center], avg});

        Chunk chunk;
        chunk.indices.push_back(center);
        for (int v : graph.adjacency[center]) {
            if (alive[v]) chunk.indices.push_back(v);
        }
        std::sort(chunk.indices.begin() + 1, chunk.indices.end());

        for (int v : chunk.indices) alive[v] = false;
        for (int v : chunk.indices) {
            edge_endpoints -= degree[v];
            for (int w : graph.adjacency[v]) {
                if (alive[w]) {
                    --degree[w];
                    --edge_endpoints;
                }
            }
        }
        remaining -= static_cast<int>(chunk.indices.size());

        out.ordering.insert(out.ordering.end(), chunk.indices.begin(), chunk.indices.end());
        out.chunks.push_back(std::move(chunk));
    }
    return out;
}

}  // namespace planks
