#include "planks/instances.hpp"

#include <cmath>
#include <stdexcept>

#include "planks/rng.hpp"

namespace planks {

void AdversarialParams::validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("adversarial: epsilon must be positive");
    if (!(cap_angle > 0.0 && cap_angle < kPi / 2.0)) {
        throw std::invalid_argument("adversarial: cap_angle must lie in (0, pi/2)");
    }
    if (!(separation_factor > 0.0)) {
        throw std::invalid_argument("adversarial: separation_factor must be positive");
    }
}

double AdversarialParams::separation() const {
    return separation_factor * std::pow(epsilon, 2.0 / 3.0);
}

Instance gen_random(int k, double epsilon, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("gen_random: k must be >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("gen_random: epsilon must be positive");
    Instance inst;
    inst.epsilon = epsilon;
    inst.metadata.name = "random";
    inst.metadata.seed = seed;
    inst.metadata.params["k"] = static_cast<double>(k);
    inst.metadata.params["epsilon"] = epsilon;
    Rng rng(substream_seed(seed, 0));
    inst.planks.reserve(k);
    for (int i = 0; i < k; ++i) {
        inst.planks.emplace_back(UnitVector(sample_unit_sphere(rng)), epsilon);
    }
    return inst;
}

Instance gen_parallel(int k, double epsilon, const UnitVector& normal) {
    if (k < 1) throw std::invalid_argument("gen_parallel: k must be >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("gen_parallel: epsilon must be positive");
    Instance inst;
    inst.epsilon = epsilon;
    inst.metadata.name = "parallel";
    inst.metadata.params["k"] = static_cast<double>(k);
    inst.metadata.params["epsilon"] = epsilon;
    inst.planks.assign(k, Plank(normal, epsilon));
    return inst;
}

Instance gen_adversarial(const AdversarialParams& params) {
    params.validate();
    const double separation = params.separation();
    constexpr int kRejectionBudget = 10000;

    Instance inst;
    inst.epsilon = params.epsilon;
    inst.metadata.name = "adversarial";
    inst.metadata.seed = params.seed;
    inst.metadata.params["epsilon"] = params.epsilon;
    inst.metadata.params["cap_angle"] = params.cap_angle;
    inst.metadata.params["separation_factor"] = params.separation_factor;
    inst.metadata.params["separation"] = separation;

    // With the separation at or beyond the cap diameter no second point fits;
    // flagged in the metadata rather than treated as fatal.
    if (separation >= 2.0 * params.cap_angle) {
        inst.metadata.params["infeasible_separation"] = 1.0;
    }

    std::vector<UnitVector> accepted;
    Rng rng(substream_seed(params.seed, 1));
    int rejections = 0;
    while (rejections < kRejectionBudget) {
        const UnitVector candidate(sample_polar_cap(rng, params.cap_angle));
        bool ok = true;
        for (const UnitVector& a : accepted) {
            if (angular_distance(candidate, a) < separation) {
                ok = false;
                break;
            }
        }
        if (ok) {
            accepted.push_back(candidate);
            rejections = 0;
        } else {
            ++rejections;
        }
    }

    inst.metadata.params["k"] = static_cast<double>(accepted.size());
    inst.planks.reserve(accepted.size());
    for (const UnitVector& n : accepted) inst.planks.emplace_back(n, params.epsilon);
    return inst;
}

}  // namespace planks
