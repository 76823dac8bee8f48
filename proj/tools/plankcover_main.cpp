// plankcover: generate plank instances, build non-dissective coverings of the
// unit ball, verify certificates, and sweep the covering-count exponent.
//
// Exit codes: 0 ok, 2 usage/parameters, 3 numerical failure, 4 certificate
// static check failed, 5 coverage incomplete.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "planks/engine.hpp"
#include "planks/instances.hpp"
#include "planks/io.hpp"
#include "planks/measure.hpp"
#include "planks/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitStatic = 4;
constexpr int kExitCoverage = 5;

struct GenOptions {
    std::string generator;
    int k = 10;
    double eps = 0.1;
    std::uint64_t seed = 0;
    double cap = planks::kPi / 6.0;
    double sep = 2.0;
    std::vector<double> normal{0.0, 0.0, 1.0};
    std::string out = "instance.json";
};

int run_gen(const GenOptions& opt) {
    planks::Instance inst;
    if (opt.generator == "random") {
        inst = planks::gen_random(opt.k, opt.eps, opt.seed);
    } else if (opt.generator == "parallel") {
        inst = planks::gen_parallel(opt.k, opt.eps,
                                    planks::UnitVector(opt.normal[0], opt.normal[1], opt.normal[2]));
    } else if (opt.generator == "adversarial") {
        planks::AdversarialParams params;
        params.epsilon = opt.eps;
        params.cap_angle = opt.cap;
        params.separation_factor = opt.sep;
        params.seed = opt.seed;
        inst = planks::gen_adversarial(params);
    } else {
        std::cerr << "unknown generator: " << opt.generator << "\n";
        return kExitUsage;
    }
    for (const planks::Plank& p : inst.planks) {
        if (p.oversized()) {
            std::cerr << "warning: plank width " << p.width << " exceeds the ball diameter\n";
            break;
        }
    }
    planks::write_file(opt.out, planks::instance_to_json(inst));
    std::cout << "wrote " << opt.out << " (" << inst.size() << " planks)\n";
    return kExitOk;
}

struct CoverOptions {
    std::string in;
    std::string out = "certificate.json";
    std::string mode = "chunked";
    double tol_support = 1e-9;
    double tol_empty = 1e-9;
    int max_planks = 0;
    bool record_volumes = false;
    std::int64_t volume_samples = 10000;
    std::uint64_t seed = 0;
    double theta = 0.0;
};

int run_cover_cmd(const CoverOptions& opt) {
    const planks::Instance inst = planks::instance_from_json(planks::read_file(opt.in));
    planks::EngineConfig config;
    if (opt.mode == "chunked") {
        config.mode = planks::CoverMode::kChunked;
    } else if (opt.mode == "fixed_order") {
        config.mode = planks::CoverMode::kFixedOrder;
    } else {
        std::cerr << "unknown mode: " << opt.mode << "\n";
        return kExitUsage;
    }
    config.tol_support = opt.tol_support;
    config.tol_empty = opt.tol_empty;
    if (opt.max_planks > 0) config.max_planks = opt.max_planks;
    config.record_volumes = opt.record_volumes;
    config.volume_samples = opt.volume_samples;
    config.seed = opt.seed;
    config.theta = opt.theta;

    const planks::CoverCertificate cert = planks::run_cover(inst, config);
    planks::write_file(opt.out, planks::certificate_to_json(cert));
    std::cout << "covered=" << (cert.covered ? "true" : "false")
              << " planks_used=" << cert.planks_used << "\n";
    if (!cert.error.empty()) {
        std::cerr << "numerical failure: " << cert.error << " (partial certificate written)\n";
        return kExitNumerical;
    }
    return kExitOk;
}

struct VerifyOptions {
    std::string instance;
    std::string certificate;
    std::int64_t samples = 1000000;
    std::uint64_t seed = 1;
    double tol_support = 1e-9;
};

int run_verify(const VerifyOptions& opt) {
    const planks::Instance inst = planks::instance_from_json(planks::read_file(opt.instance));
    const planks::CoverCertificate cert =
        planks::certificate_from_json(planks::read_file(opt.certificate));

    const planks::StaticCheckResult check =
        planks::verify_certificate_static(inst, cert, opt.tol_support);
    if (!check.ok) {
        for (const std::string& reason : check.reasons) std::cerr << "static: " << reason << "\n";
        std::cout << "static_ok=false\n";
        return kExitStatic;
    }
    const double uncovered = planks::verify_cover(inst, cert, opt.samples, opt.seed);
    std::cout << "static_ok=true uncovered_fraction=" << planks::format_double(uncovered) << "\n";
    return uncovered > 0.0 ? kExitCoverage : kExitOk;
}

struct SweepOptions {
    std::string config;
    std::string out = "sweep.csv";
    unsigned workers = 0;
};

int run_sweep_cmd(const SweepOptions& opt) {
    const planks::SweepConfig config = planks::parse_sweep_config(planks::read_file(opt.config));
    const planks::SweepResult result = planks::run_sweep(config, opt.workers);
    const std::string csv = planks::sweep_csv(result);
    planks::write_file(opt.out, csv);
    for (const planks::ExponentFit& fit : result.fits) {
        std::cout << "slope " << fit.generator << "/" << fit.mode << " = "
                  << planks::format_double(fit.slope) << " (" << fit.points << " points)\n";
    }
    std::cout << "wrote " << opt.out << " (" << result.rows.size() << " rows)\n";
    return kExitOk;
}

struct ExportOptions {
    std::string instance;
    std::string certificate;
    std::string out = "cover.obj";
};

int run_export(const ExportOptions& opt) {
    const planks::Instance inst = planks::instance_from_json(planks::read_file(opt.instance));
    const planks::CoverCertificate cert =
        planks::certificate_from_json(planks::read_file(opt.certificate));
    planks::write_file(opt.out, planks::export_obj(inst, cert));
    std::cout << "wrote " << opt.out << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-dissective translative plank coverings of the unit ball"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate an instance file");
    cmd_gen->add_option("generator", gen.generator, "random | parallel | adversarial")->required();
    cmd_gen->add_option("--k", gen.k, "plank count (random, parallel)");
    cmd_gen->add_option("--eps", gen.eps, "plank width");
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    cmd_gen->add_option("--cap", gen.cap, "polar cap angle (adversarial)");
    cmd_gen->add_option("--sep", gen.sep, "separation factor (adversarial)");
    cmd_gen->add_option("--normal", gen.normal, "common normal (parallel)")->expected(3);
    cmd_gen->add_option("--out", gen.out, "output instance JSON");

    CoverOptions cover;
    CLI::App* cmd_cover = app.add_subcommand("cover", "run the greedy covering");
    cmd_cover->add_option("--in", cover.in, "instance JSON")->required();
    cmd_cover->add_option("--out", cover.out, "output certificate JSON");
    cmd_cover->add_option("--mode", cover.mode, "chunked | fixed_order");
    cmd_cover->add_option("--tol-support", cover.tol_support, "support tolerance");
    cmd_cover->add_option("--tol-empty", cover.tol_empty, "emptiness tolerance");
    cmd_cover->add_option("--max-planks", cover.max_planks, "stop after this many placements");
    cmd_cover->add_flag("--record-volumes", cover.record_volumes, "sample Vol K and Vol B(K)");
    cmd_cover->add_option("--volume-samples", cover.volume_samples, "samples per volume record");
    cmd_cover->add_option("--seed", cover.seed, "stream seed for recorded estimates");
    cmd_cover->add_option("--theta", cover.theta, "chunking angle override (radians)");

    VerifyOptions verify;
    CLI::App* cmd_verify = app.add_subcommand("verify", "audit a certificate");
    cmd_verify->add_option("--instance", verify.instance, "instance JSON")->required();
    cmd_verify->add_option("--certificate", verify.certificate, "certificate JSON")->required();
    cmd_verify->add_option("--samples", verify.samples, "Monte Carlo samples");
    cmd_verify->add_option("--seed", verify.seed, "sampling seed");
    cmd_verify->add_option("--tol-support", verify.tol_support, "tangency tolerance");

    SweepOptions sweep;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "run an epsilon grid and fit exponents");
    cmd_sweep->add_option("--config", sweep.config, "sweep config JSON")->required();
    cmd_sweep->add_option("--out", sweep.out, "output CSV");
    cmd_sweep->add_option("--workers", sweep.workers, "worker threads (0 = auto)");

    ExportOptions exp;
    CLI::App* cmd_export = app.add_subcommand("export-obj", "write placed slabs as OBJ quads");
    cmd_export->add_option("--instance", exp.instance, "instance JSON")->required();
    cmd_export->add_option("--certificate", exp.certificate, "certificate JSON")->required();
    cmd_export->add_option("--out", exp.out, "output OBJ");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_cover->parsed()) return run_cover_cmd(cover);
        if (cmd_verify->parsed()) return run_verify(verify);
        if (cmd_sweep->parsed()) return run_sweep_cmd(sweep);
        if (cmd_export->parsed()) return run_export(exp);
    } catch (const planks::EmptyRegionError& e) {
        std::cerr << "numerical: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
