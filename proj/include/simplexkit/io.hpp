#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simplexkit/core.hpp"

namespace simplexkit::io {

// Simplex file:   {"vertices": [[x0, ..., x(n-1)], ...]}
// Point-set file: {"points":   [[...], ...]}
// Both are UTF-8 JSON. Non-finite numbers are rejected with ErrorKind::Parse.

/// Parses the vertex list and validates it as a simplex (may throw Degenerate).
Simplex parse_simplex(std::string_view text);
std::vector<Point> parse_point_set(std::string_view text);

/// Throws ErrorKind::Parse if the file cannot be read.
std::string read_file(const std::string& path);

std::string simplex_to_json(const Simplex& s);
std::string point_set_to_json(const std::vector<Point>& points);

}  // namespace simplexkit::io
