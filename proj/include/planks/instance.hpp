#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "planks/region.hpp"

namespace planks {

struct GeneratorInfo {
    std::string name;
    std::uint64_t seed = 0;
    std::map<std::string, double> params;
};

/// A named collection of planks. `epsilon` is the common width for uniform
/// instances; for heterogeneous widths it is the minimum width.
struct Instance {
    std::vector<Plank> planks;
    double epsilon = 0.0;
    GeneratorInfo metadata;

    void validate() const {
        if (planks.empty()) throw std::invalid_argument("Instance: planks must be nonempty");
        if (!(epsilon > 0.0)) throw std::invalid_argument("Instance: epsilon must be positive");
    }

    double min_width() const {
        double w = planks.front().width;
        for (const Plank& p : planks) w = std::min(w, p.width);
        return w;
    }

    int size() const { return static_cast<int>(planks.size()); }
};

}  // namespace planks
