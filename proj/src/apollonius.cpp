#include "simplexkit/apollonius.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace simplexkit {

namespace {

void check_index(const Simplex& s, std::size_t i) {
    if (i >= s.vertex_count())
        throw GeometryError(ErrorKind::IndexOutOfRange, "vertex index " + std::to_string(i) + " out of range");
}

double relative_residual(double lhs, double rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale > 0.0 ? (lhs - rhs) / scale : 0.0;
}

struct RadicandTerms {
    double incident = 0.0;  // sum of squared edges at vertex i
    double opposite = 0.0;  // sum of squared edges of the face opposite i
};

RadicandTerms radicand_terms(const EdgeProfile& profile, std::size_t i) {
    const std::size_t count = profile.vertex_count();
    RadicandTerms t;
    for (std::size_t j = 0; j < count; ++j)
        if (j != i) t.incident += profile.squared_length(i, j);
    for (std::size_t p = 0; p < count; ++p) {
        if (p == i) continue;
        for (std::size_t q = p + 1; q < count; ++q)
            if (q != i) t.opposite += profile.squared_length(p, q);
    }
    return t;
}

}  // namespace

double median_radicand(const EdgeProfile& profile, std::size_t i) {
    const std::size_t count = profile.vertex_count();
    if (i >= count)
        throw GeometryError(ErrorKind::IndexOutOfRange, "vertex index " + std::to_string(i) + " out of range");
    const double m = static_cast<double>(count - 1);
    const RadicandTerms t = radicand_terms(profile, i);
    const double radicand = m * t.incident - t.opposite;
    if (radicand >= 0.0) return radicand;
    const double scale = m * t.incident + t.opposite;
    if (radicand >= -kRadicandFloor * scale) return 0.0;
    throw GeometryError(ErrorKind::NegativeRadicand,
                        "negative median radicand " + std::to_string(radicand) + " at vertex " +
                            std::to_string(i));
}

double median_length(const Simplex& s, std::size_t i) {
    check_index(s, i);
    const EdgeProfile profile(s);
    return std::sqrt(median_radicand(profile, i)) / static_cast<double>(s.order());
}

double apollonius_residual(const Simplex& s, std::size_t i) {
    check_index(s, i);
    const EdgeProfile profile(s);
    const double m = static_cast<double>(s.order());
    const RadicandTerms t = radicand_terms(profile, i);
    const double median_sq = squared_distance(s.vertex(i), face_centroid(s, i));
    return m * t.incident - (t.opposite + m * m * median_sq);
}

CommandinoRatio commandino_ratio(const Simplex& s, std::size_t i) {
    check_index(s, i);
    const Point kappa = barycenter(s);
    const Point kappa_i = face_centroid(s, i);
    const Point& v = s.vertex(i);
    CommandinoRatio out;
    out.barycenter_to_face_centroid = distance(kappa, kappa_i);
    out.barycenter_to_vertex = distance(kappa, v);
    out.collinearity_residual = out.barycenter_to_vertex + out.barycenter_to_face_centroid - distance(v, kappa_i);
    return out;
}

MedianReport median_sums(const Simplex& s) {
    const EdgeProfile profile(s);
    const Point kappa = barycenter(s);
    const std::size_t count = s.vertex_count();
    const double m = static_cast<double>(s.order());

    MedianReport report;
    report.median_lengths.reserve(count);
    report.apollonius_residuals.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        report.median_lengths.push_back(std::sqrt(median_radicand(profile, i)) / m);
        report.apollonius_residuals.push_back(apollonius_residual(s, i));
        report.sum_squares_medians += squared_distance(s.vertex(i), face_centroid(s, i));
        report.sum_squares_center_to_vertices += squared_distance(kappa, s.vertex(i));
    }
    report.sum_squares_edges = profile.sum_squared();
    report.median_sum_residual =
        relative_residual(report.sum_squares_medians, (m + 1.0) / (m * m) * report.sum_squares_edges);
    report.center_sum_residual =
        relative_residual(report.sum_squares_center_to_vertices, report.sum_squares_edges / (m + 1.0));
    return report;
}

double pythagoras_regular_residual(const Simplex& s, std::size_t i, std::size_t j) {
    check_index(s, i);
    check_index(s, j);
    if (i == j) throw GeometryError(ErrorKind::IndexOutOfRange, "Pythagoras identity needs i != j");
    require_regular(s);
    const Point kappa_i = face_centroid(s, i);
    return squared_distance(s.vertex(i), kappa_i) + squared_distance(s.vertex(j), kappa_i) -
           squared_distance(s.vertex(i), s.vertex(j));
}

CarnotCheck carnot_regular_check(const Simplex& s) {
    require_regular(s);
    const Point kappa = barycenter(s);
    CarnotCheck out;
    for (std::size_t i = 0; i < s.vertex_count(); ++i) out.face_distance_sum += distance(kappa, face_centroid(s, i));
    out.radii_sum = distance(s.vertex(0), kappa) + distance(kappa, face_centroid(s, 0));
    return out;
}

}  // namespace simplexkit
