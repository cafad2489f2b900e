#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "simplexkit/apollonius.hpp"
#include "simplexkit/bisection.hpp"
#include "simplexkit/enclosing.hpp"
#include "simplexkit/metrics.hpp"

namespace simplexkit::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Compact JSON with insertion-ordered keys and every floating-point value
/// printed with 17 significant digits, so equal inputs give equal bytes.
std::string dump(const Json& doc);

/// Lowercase hex SHA-256 of the input bytes.
std::string digest(std::string_view bytes);

Json envelope(std::string_view command, std::string_view input_digest, Json payload);

Json to_json(const Point& p);
Json to_json(const Simplex& s);
Json to_json(const EdgeProfile& profile);
Json to_json(const MedianReport& r);
Json to_json(const MetricsReport& r);
Json to_json(const EnclosureReport& r);
Json to_json(const MinimumBall& b);
Json to_json(const BisectionStep& step);
Json to_json(const BisectionTrace& trace);
Json to_json(const InequalityCheck& check);

}  // namespace simplexkit::report
