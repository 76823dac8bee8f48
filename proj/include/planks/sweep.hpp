#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planks/engine.hpp"
#include "planks/io.hpp"

namespace planks {

struct SweepRow {
    double epsilon = 0.0;
    std::int64_t k_supplied = 0;
    std::int64_t planks_used = 0;
    bool covered = false;
    std::string mode;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
    std::string generator;  // grouping key for the exponent fit; not a CSV column
};

/// One grid of runs sharing a generator, mode and k-rule.
struct SweepGroup {
    std::string generator;  // random | parallel | adversarial
    CoverMode mode = CoverMode::kChunked;
    std::vector<double> epsilons;
    std::vector<std::uint64_t> seeds;
    std::optional<KRule> k_rule;  // required unless the generator fixes k itself
    double cap_angle = kPi / 6.0;
    double separation_factor = 2.0;
    Vec3 normal{0.0, 0.0, 1.0};
    std::int64_t verify_samples = 100000;
    bool timing = true;  // false writes 0 wall seconds for bit-exact outputs
    EngineConfig engine;
};

struct SweepConfig {
    std::vector<SweepGroup> groups;
};

struct ExponentFit {
    std::string generator;
    std::string mode;
    double slope = 0.0;
    int points = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<ExponentFit> fits;
};

SweepConfig parse_sweep_config(const std::string& text);

/// Runs every (epsilon, seed) cell of every group; cells are independent and
/// may run on a worker pool, rows come back in the deterministic grid order.
SweepResult run_sweep(const SweepConfig& config, unsigned workers = 0);

/// Header row exactly: epsilon,k_supplied,planks_used,covered,mode,seed,wall_time_s
/// followed by the rows, then one comment line per fitted exponent.
std::string sweep_csv(const SweepResult& result);

std::string mode_name(CoverMode mode);

}  // namespace planks
