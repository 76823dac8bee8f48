#pragma once

#include <cstdint>
#include <string>

#include "planks/certificate.hpp"
#include "planks/instance.hpp"

namespace planks {

/// Canonical float formatting: 17 significant digits, enough to round-trip
/// any double exactly. All serialized reals go through this.
std::string format_double(double v);

// Canonical JSON: sorted keys, two-space indent, floats via format_double.
// Serializing a parsed file reproduces it byte for byte.
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

std::string certificate_to_json(const CoverCertificate& cert);
CoverCertificate certificate_from_json(const std::string& text);

/// Wavefront OBJ with one quad per boundary plane of each placed plank (two
/// per plank), each quad inscribed in the plane's cross-section of the
/// radius-2 ball. Deterministic vertex order.
std::string export_obj(const Instance& instance, const CoverCertificate& cert);

/// k-rule of the form "ceil(c * eps^(-p))" with numeric literals c and p.
struct KRule {
    double c = 0.0;
    double p = 0.0;

    std::int64_t eval(double epsilon) const;
};
KRule parse_k_rule(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace planks
