#include "planks/sweep.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "planks/instances.hpp"
#include "planks/measure.hpp"
#include "planks/parallel.hpp"

namespace planks {

namespace {

using nlohmann::json;

SweepGroup parse_group(const json& g) {
    SweepGroup group;
    group.generator = g.at("generator").get<std::string>();
    if (group.generator != "random" && group.generator != "parallel" &&
        group.generator != "adversarial") {
        throw std::invalid_argument("sweep: unknown generator " + group.generator);
    }
    const std::string mode = g.value("mode", std::string("chunked"));
    if (mode == "chunked") {
        group.mode = CoverMode::kChunked;
    } else if (mode == "fixed_order") {
        group.mode = CoverMode::kFixedOrder;
    } else {
        throw std::invalid_argument("sweep: unknown mode " + mode);
    }
    for (const json& e : g.at("epsilons")) group.epsilons.push_back(e.get<double>());
    if (group.epsilons.empty()) throw std::invalid_argument("sweep: empty epsilon grid");
    if (g.contains("seeds")) {
        for (const json& s : g.at("seeds")) group.seeds.push_back(s.get<std::uint64_t>());
    } else {
        group.seeds.push_back(1);
    }
    if (g.contains("k_rule")) group.k_rule = parse_k_rule(g.at("k_rule").get<std::string>());
    if (group.generator != "adversarial" && !group.k_rule) {
        throw std::invalid_argument("sweep: generator " + group.generator + " needs a k_rule");
    }
    group.cap_angle = g.value("cap_angle", group.cap_angle);
    group.separation_factor = g.value("separation_factor", group.separation_factor);
    if (g.contains("normal")) {
        const json& n = g.at("normal");
        group.normal = {n.at(0).get<double>(), n.at(1).get<double>(), n.at(2).get<double>()};
    }
    group.verify_samples = g.value("samples", group.verify_samples);
    group.timing = g.value("timing", true);
    group.engine.mode = group.mode;
    group.engine.tol_support = g.value("tol_support", group.engine.tol_support);
    group.engine.tol_empty = g.value("tol_empty", group.engine.tol_empty);
    return group;
}

SweepRow run_cell(const SweepGroup& group, double epsilon, std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();

    Instance inst;
    if (group.generator == "random") {
        inst = gen_random(static_cast<int>(group.k_rule->eval(epsilon)), epsilon, seed);
    } else if (group.generator == "parallel") {
        inst = gen_parallel(static_cast<int>(group.k_rule->eval(epsilon)), epsilon,
                            UnitVector(group.normal));
    } else {
        AdversarialParams params;
        params.epsilon = epsilon;
        params.cap_angle = group.cap_angle;
        params.separation_factor = group.separation_factor;
        params.seed = seed;
        inst = gen_adversarial(params);
    }

    EngineConfig engine = group.engine;
    engine.seed = seed;
    const CoverCertificate cert = run_cover(inst, engine);

    SweepRow row;
    row.epsilon = epsilon;
    row.k_supplied = inst.size();
    row.planks_used = cert.planks_used;
    row.covered = cert.covered;
    row.mode = mode_name(group.mode);
    row.seed = seed;
    row.generator = group.generator;

    // A covered certificate must leave no uncovered mass at the verification
    // resolution; downgrade the flag (and leave a trace) if sampling finds any.
    if (row.covered && group.verify_samples > 0) {
        const double uncovered = verify_cover(inst, cert, group.verify_samples, seed);
        if (uncovered > 0.0) row.covered = false;
    }

    if (group.timing) {
        row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return row;
}

}  // namespace

std::string mode_name(CoverMode mode) {
    return mode == CoverMode::kChunked ? "chunked" : "fixed_order";
}

SweepConfig parse_sweep_config(const std::string& text) {
    const json j = json::parse(text);
    SweepConfig config;
    if (j.contains("groups")) {
        for (const json& g : j.at("groups")) config.groups.push_back(parse_group(g));
    } else {
        config.groups.push_back(parse_group(j));
    }
    return config;
}

SweepResult run_sweep(const SweepConfig& config, unsigned workers) {
    struct Cell {
        const SweepGroup* group;
        double epsilon;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (const SweepGroup& group : config.groups) {
        for (double eps : group.epsilons) {
            for (std::uint64_t seed : group.seeds) cells.push_back({&group, eps, seed});
        }
    }

    SweepResult result;
    result.rows.resize(cells.size());
    parallel_for(static_cast<std::int64_t>(cells.size()),
                 [&](std::int64_t i) {
                     const Cell& cell = cells[i];
                     result.rows[i] = run_cell(*cell.group, cell.epsilon, cell.seed);
                 },
                 workers);

    // Least-squares slope of log(planks_used) against log(1/epsilon), one fit
    // per (generator, mode) pair across all of its rows.
    std::map<std::pair<std::string, std::string>, std::vector<std::pair<double, double>>> groups;
    for (const SweepRow& row : result.rows) {
        if (row.planks_used <= 0) continue;
        groups[{row.generator, row.mode}].push_back(
            {std::log(1.0 / row.epsilon), std::log(static_cast<double>(row.planks_used))});
    }
    for (const auto& [key, pts] : groups) {
        if (pts.size() < 2) continue;
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (const auto& [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(pts.size());
        const double denom = n * sxx - sx * sx;
        if (std::abs(denom) < 1e-12) continue;  // single epsilon: slope undefined
        ExponentFit fit;
        fit.generator = key.first;
        fit.mode = key.second;
        fit.slope = (n * sxy - sx * sy) / denom;
        fit.points = static_cast<int>(pts.size());
        result.fits.push_back(fit);
    }
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = "epsilon,k_supplied,planks_used,covered,mode,seed,wall_time_s\n";
    for (const SweepRow& row : result.rows) {
        out += format_double(row.epsilon) + "," + std::to_string(row.k_supplied) + "," +
               std::to_string(row.planks_used) + "," + (row.covered ? "true" : "false") + "," +
               row.mode + "," + std::to_string(row.seed) + "," + format_double(row.wall_time_s) +
               "\n";
    }
    for (const ExponentFit& fit : result.fits) {
        out += "# slope generator=" + fit.generator + " mode=" + fit.mode +
               " points=" + std::to_string(fit.points) + " value=" + format_double(fit.slope) +
               "\n";
    }
    return out;
}

}  // namespace planks
