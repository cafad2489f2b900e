#include "simplexkit/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "simplexkit/report.hpp"

namespace simplexkit::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw GeometryError(ErrorKind::Parse, what); }

std::vector<Point> parse_rows(std::string_view text, const char* key) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array())
        parse_error(std::string("expected an object with an array field \"") + key + "\"");
    std::vector<Point> rows;
    for (const json& row : doc[key]) {
        if (!row.is_array() || row.empty()) parse_error("each entry must be a non-empty array of numbers");
        std::vector<double> coords;
        coords.reserve(row.size());
        for (const json& c : row) {
            if (!c.is_number()) parse_error("coordinates must be numbers");
            const double v = c.get<double>();
            if (!std::isfinite(v)) parse_error("coordinates must be finite");
            coords.push_back(v);
        }
        rows.emplace_back(std::move(coords));
    }
    return rows;
}

std::string rows_to_json(std::span<const Point> rows, const char* key) {
    report::Json doc = report::Json::object();
    report::Json arr = report::Json::array();
    for (const Point& p : rows) arr.push_back(p.vector());
    doc[key] = std::move(arr);
    return report::dump(doc);
}

}  // namespace

Simplex parse_simplex(std::string_view text) {
    std::vector<Point> vertices = parse_rows(text, "vertices");
    return Simplex::validate(std::move(vertices));
}

std::vector<Point> parse_point_set(std::string_view text) { return parse_rows(text, "points"); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string simplex_to_json(const Simplex& s) { return rows_to_json(s.vertices(), "vertices"); }

std::string point_set_to_json(const std::vector<Point>& points) { return rows_to_json(points, "points"); }

}  // namespace simplexkit::io
