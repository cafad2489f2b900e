#include "simplexkit/report.hpp"

#include <cmath>
#include <cstdio>

#include <openssl/evp.h>

namespace simplexkit::report {

namespace {

void write_number(std::string& out, double v) {
    if (!std::isfinite(v)) {
        out += "null";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void write(std::string& out, const Json& node) {
    switch (node.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : node.items()) {
                if (!first) out += ',';
                first = false;
                out += Json(key).dump();
                out += ':';
                write(out, value);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            bool first = true;
            for (const Json& value : node) {
                if (!first) out += ',';
                first = false;
                write(out, value);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float:
            write_number(out, node.get<double>());
            break;
        default:
            out += node.dump();
            break;
    }
}

Json pair_json(const IndexPair& p) { return Json::array({p.i, p.j}); }

}  // namespace

std::string dump(const Json& doc) {
    std::string out;
    write(out, doc);
    return out;
}

std::string digest(std::string_view bytes) {
    unsigned char hash[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(bytes.data(), bytes.size(), hash, &length, EVP_sha256(), nullptr);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    hex.reserve(2 * length);
    for (unsigned int k = 0; k < length; ++k) {
        hex += kHex[hash[k] >> 4];
        hex += kHex[hash[k] & 0xF];
    }
    return hex;
}

Json envelope(std::string_view command, std::string_view input_digest, Json payload) {
    Json doc = Json::object();
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = std::string(command);
    doc["input_digest"] = std::string(input_digest);
    doc["payload"] = std::move(payload);
    return doc;
}

Json to_json(const Point& p) { return Json(p.vector()); }

Json to_json(const Simplex& s) {
    Json doc = Json::object();
    doc["m"] = s.order();
    doc["n"] = s.ambient_dim();
    Json verts = Json::array();
    for (const Point& v : s.vertices()) verts.push_back(to_json(v));
    doc["vertices"] = std::move(verts);
    return doc;
}

Json to_json(const EdgeProfile& profile) {
    Json doc = Json::object();
    doc["diam"] = profile.diam();
    doc["shor"] = profile.shor();
    doc["diam_edge"] = pair_json(profile.diam_edge());
    doc["shor_edge"] = pair_json(profile.shor_edge());
    Json lengths = Json::array();
    for (std::size_t e = 0; e < profile.edge_count(); ++e) {
        Json entry = Json::object();
        entry["edge"] = pair_json(profile.pairs()[e]);
        entry["length"] = profile.lengths()[e];
        lengths.push_back(std::move(entry));
    }
    doc["lengths"] = std::move(lengths);
    return doc;
}

Json to_json(const MedianReport& r) {
    Json doc = Json::object();
    doc["median_lengths"] = r.median_lengths;
    doc["apollonius_residuals"] = r.apollonius_residuals;
    doc["sum_squares_medians"] = r.sum_squares_medians;
    doc["sum_squares_center_to_vertices"] = r.sum_squares_center_to_vertices;
    doc["sum_squares_edges"] = r.sum_squares_edges;
    doc["median_sum_residual"] = r.median_sum_residual;
    doc["center_sum_residual"] = r.center_sum_residual;
    return doc;
}

Json to_json(const MetricsReport& r) {
    Json doc = Json::object();
    doc["barycentric_inradius"] = r.barycentric_inradius;
    doc["inradius_face"] = r.inradius_face;
    doc["barycentric_inradius_estimate"] = r.barycentric_inradius_estimate;
    doc["estimate_face"] = r.estimate_face;
    doc["thickness"] = r.thickness;
    doc["thickness_estimate"] = r.thickness_estimate;
    doc["exact_inradius"] = r.exact_inradius ? Json(*r.exact_inradius) : Json(nullptr);
    doc["exact_incenter"] = r.exact_incenter ? to_json(*r.exact_incenter) : Json(nullptr);
    doc["incenter_condition_number"] =
        r.incenter_condition_number ? Json(*r.incenter_condition_number) : Json(nullptr);
    doc["diam"] = r.diam;
    doc["shor"] = r.shor;
    return doc;
}

Json to_json(const EnclosureReport& r) {
    Json doc = Json::object();
    doc["barycentric_circumradius"] = r.barycentric_circumradius;
    doc["jung_bound"] = r.jung_bound;
    doc["combined_bound"] = r.combined_bound;
    doc["meb_radius"] = r.meb_radius;
    doc["meb_center"] = to_json(r.meb_center);
    doc["barycenter"] = to_json(r.barycenter);
    doc["argmax_vertex"] = r.argmax_vertex;
    doc["diam"] = r.diam;
    doc["dominance_holds"] = r.dominance_holds;
    return doc;
}

Json to_json(const MinimumBall& b) {
    Json doc = Json::object();
    doc["center"] = to_json(b.center);
    doc["radius"] = b.radius;
    doc["support"] = b.support;
    doc["support_weights"] = b.support_weights;
    doc["certified"] = b.certified;
    return doc;
}

Json to_json(const BisectionStep& step) {
    Json doc = Json::object();
    doc["depth"] = step.depth;
    doc["choice"] = to_string(step.choice);
    doc["diam"] = step.diam;
    doc["shor"] = step.shor;
    doc["epsilon"] = step.error_estimate;
    doc["kearfott_bound"] = step.kearfott_bound;
    doc["barycenter"] = to_json(step.barycenter);
    return doc;
}

Json to_json(const BisectionTrace& trace) {
    Json doc = Json::object();
    Json steps = Json::array();
    for (const BisectionStep& step : trace.steps) steps.push_back(to_json(step));
    doc["steps"] = std::move(steps);
    doc["final_approximation"] = to_json(trace.final_approximation);
    doc["final_error_estimate"] = trace.final_error_estimate;
    doc["converged"] = trace.converged;
    doc["residual_norm"] = trace.residual_norm;
    doc["evaluations"] = trace.evaluations;
    return doc;
}

Json to_json(const InequalityCheck& check) {
    Json doc = Json::object();
    doc["name"] = check.name;
    doc["lhs"] = check.lhs;
    doc["rhs"] = check.rhs;
    doc["holds"] = check.holds;
    return doc;
}

}  // namespace simplexkit::report
