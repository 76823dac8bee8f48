#include "planks/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace planks {

namespace {

using nlohmann::json;

void append_indent(std::string& out, int depth) { out.append(2 * depth, ' '); }

std::string vec_json(const Vec3& v) {
    return "[" + format_double(v.x) + ", " + format_double(v.y) + ", " + format_double(v.z) + "]";
}

Vec3 vec_from(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-vector");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::string estimate_json(const VolumeEstimate& e) {
    std::string out = "{\"mean\": " + format_double(e.mean);
    out += ", \"samples\": " + std::to_string(e.samples);
    out += ", \"se\": " + format_double(e.std_error);
    out += ", \"seed\": " + std::to_string(e.seed) + "}";
    return out;
}

VolumeEstimate estimate_from(const json& j) {
    VolumeEstimate e;
    e.mean = j.at("mean").get<double>();
    e.samples = j.at("samples").get<std::int64_t>();
    e.std_error = j.at("se").get<double>();
    e.seed = j.at("seed").get<std::uint64_t>();
    return e;
}

}  // namespace

std::string format_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("format_double: non-finite value");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string instance_to_json(const Instance& instance) {
    std::string out = "{\n";
    out += "  \"epsilon\": " + format_double(instance.epsilon) + ",\n";
    out += "  \"metadata\": {\n";
    out += "    \"generator\": \"" + instance.metadata.name + "\",\n";
    out += "    \"params\": {";
    bool first = true;
    for (const auto& [key, value] : instance.metadata.params) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "      \"" + key + "\": " + format_double(value);
    }
    out += first ? "},\n" : "\n    },\n";
    out += "    \"seed\": " + std::to_string(instance.metadata.seed) + "\n";
    out += "  },\n";
    out += "  \"planks\": [";
    first = true;
    for (const Plank& p : instance.planks) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "    {\"normal\": " + vec_json(p.normal.vec()) +
               ", \"width\": " + format_double(p.width) + "}";
    }
    out += first ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

Instance instance_from_json(const std::string& text) {
    const json j = json::parse(text);
    Instance inst;
    inst.epsilon = j.at("epsilon").get<double>();
    if (j.contains("metadata")) {
        const json& m = j.at("metadata");
        inst.metadata.name = m.value("generator", std::string{});
        inst.metadata.seed = m.value("seed", std::uint64_t{0});
        if (m.contains("params")) {
            for (const auto& [key, value] : m.at("params").items()) {
                inst.metadata.params[key] = value.get<double>();
            }
        }
    }
    for (const json& p : j.at("planks")) {
        inst.planks.emplace_back(UnitVector(vec_from(p.at("normal"))), p.at("width").get<double>());
    }
    inst.validate();
    return inst;
}

std::string certificate_to_json(const CoverCertificate& cert) {
    std::string out = "{\n";
    out += std::string("  \"covered\": ") + (cert.covered ? "true" : "false") + ",\n";
    if (!cert.error.empty()) out += "  \"error\": \"" + cert.error + "\",\n";
    if (cert.initial_vol_parallel) {
        out += "  \"initial_vol_parallel\": " + estimate_json(*cert.initial_vol_parallel) + ",\n";
    }
    if (cert.initial_vol_region) {
        out += "  \"initial_vol_region\": " + estimate_json(*cert.initial_vol_region) + ",\n";
    }
    out += "  \"ordering\": [";
    for (std::size_t i = 0; i < cert.ordering.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(cert.ordering[i]);
    }
    out += "],\n";
    out += "  \"placements\": [";
    bool first = true;
    for (const PlacedPlank& p : cert.placements) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "    {\"lower_offset\": " + format_double(p.lower_offset) +
               ", \"normal\": " + vec_json(p.normal.vec()) +
               ", \"upper_offset\": " + format_double(p.upper_offset) + "}";
    }
    out += first ? "],\n" : "\n  ],\n";
    out += "  \"planks_used\": " + std::to_string(cert.planks_used) + ",\n";
    if (cert.probe_failures) {
        out += "  \"probe_failures\": " + std::to_string(*cert.probe_failures) + ",\n";
    }
    out += "  \"steps\": [";
    first = true;
    for (const StepRecord& s : cert.steps) {
        out += first ? "\n" : ",\n";
        first = false;
        append_indent(out, 2);
        out += "{\"constraints\": " + std::to_string(s.constraint_count);
        if (s.empty_after) out += std::string(", \"empty\": ") + (*s.empty_after ? "true" : "false");
        out += ", \"h\": " + format_double(s.support_h);
        out += ", \"plank\": " + std::to_string(s.plank_index);
        out += ", \"step\": " + std::to_string(s.step);
        if (s.vol_parallel) out += ", \"vol_parallel\": " + estimate_json(*s.vol_parallel);
        if (s.vol_region) out += ", \"vol_region\": " + estimate_json(*s.vol_region);
        out += "}";
    }
    out += first ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

CoverCertificate certificate_from_json(const std::string& text) {
    const json j = json::parse(text);
    CoverCertificate cert;
    cert.covered = j.at("covered").get<bool>();
    cert.error = j.value("error", std::string{});
    if (j.contains("initial_vol_parallel")) {
        cert.initial_vol_parallel = estimate_from(j.at("initial_vol_parallel"));
    }
    if (j.contains("initial_vol_region")) {
        cert.initial_vol_region = estimate_from(j.at("initial_vol_region"));
    }
    for (const json& o : j.at("ordering")) cert.ordering.push_back(o.get<int>());
    for (const json& p : j.at("placements")) {
        PlacedPlank placed;
        placed.normal = UnitVector(vec_from(p.at("normal")));
        placed.lower_offset = p.at("lower_offset").get<double>();
        placed.upper_offset = p.at("upper_offset").get<double>();
        cert.placements.push_back(placed);
    }
    cert.planks_used = j.at("planks_used").get<int>();
    if (j.contains("probe_failures")) cert.probe_failures = j.at("probe_failures").get<int>();
    for (const json& s : j.at("steps")) {
        StepRecord rec;
        rec.constraint_count = s.at("constraints").get<int>();
        rec.support_h = s.at("h").get<double>();
        rec.plank_index = s.at("plank").get<int>();
        rec.step = s.at("step").get<int>();
        if (s.contains("empty")) rec.empty_after = s.at("empty").get<bool>();
        if (s.contains("vol_parallel")) rec.vol_parallel = estimate_from(s.at("vol_parallel"));
        if (s.contains("vol_region")) rec.vol_region = estimate_from(s.at("vol_region"));
        cert.steps.push_back(rec);
    }
    return cert;
}

std::string export_obj(const Instance& instance, const CoverCertificate& cert) {
    if (cert.planks_used != static_cast<int>(cert.placements.size()) ||
        cert.planks_used > instance.size()) {
        throw std::invalid_argument("export_obj: certificate does not match instance");
    }
    std::string out = "# plank cover: slab boundary planes clipped to the radius-2 ball\n";
    int vertex_base = 1;
    int plank_no = 0;
    for (const PlacedPlank& p : cert.placements) {
        ++plank_no;
        Vec3 u, v;
        tangent_basis(p.normal, u, v);
        for (const double offset : {p.lower_offset, p.upper_offset}) {
            const double r2 = 4.0 - offset * offset;
            if (r2 <= 0.0) continue;  // plane misses the 2-ball
            const double r = std::sqrt(r2);
            const Vec3 c = p.normal.vec() * offset;
            const Vec3 quad[4] = {c + u * r, c + v * r, c - u * r, c - v * r};
            out += "o plank_" + std::to_string(plank_no) +
                   (offset == p.lower_offset ? "_lower\n" : "_upper\n");
            for (const Vec3& q : quad) {
                out += "v " + format_double(q.x) + " " + format_double(q.y) + " " +
                       format_double(q.z) + "\n";
            }
            out += "f " + std::to_string(vertex_base) + " " + std::to_string(vertex_base + 1) +
                   " " + std::to_string(vertex_base + 2) + " " + std::to_string(vertex_base + 3) +
                   "\n";
            vertex_base += 4;
        }
    }
    return out;
}

std::int64_t KRule::eval(double epsilon) const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("k-rule: epsilon must be positive");
    return static_cast<std::int64_t>(std::ceil(c * std::pow(epsilon, p)));
}

KRule parse_k_rule(const std::string& text) {
    static const std::regex pattern(
        R"(^\s*ceil\(\s*([0-9]+(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?)\s*\*\s*eps\^\(\s*(-?[0-9]+(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?)\s*\)\s*\)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) {
        throw std::invalid_argument("k-rule must have the form ceil(c * eps^(-p)): " + text);
    }
    return {std::stod(m[1].str()), std::stod(m[2].str())};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace planks
