#pragma once

#include <cstdint>

#include "planks/instance.hpp"

namespace planks {

/// Parameters of the polar-cap spherical-code generator. The separation is
/// separation_factor * epsilon^(2/3); it must stay below the cap diameter for
/// a second point to fit at all.
struct AdversarialParams {
    double epsilon = 0.0;
    double cap_angle = kPi / 6.0;
    double separation_factor = 2.0;
    std::uint64_t seed = 0;

    void validate() const;
    double separation() const;
};

/// k planks of width epsilon with independent uniform normals.
Instance gen_random(int k, double epsilon, std::uint64_t seed);

/// k identical planks: the exact stacked-cover oracle family.
Instance gen_parallel(int k, double epsilon, const UnitVector& normal);

/// Greedy maximal spherical code in a polar cap: candidates are sampled
/// uniformly in the cap and accepted iff they keep the pairwise angular
/// separation; generation stops once a rejection budget saturates. Plank
/// order is generation order, which is the order the covering must use.
Instance gen_adversarial(const AdversarialParams& params);

}  // namespace planks
