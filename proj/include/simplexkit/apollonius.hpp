#pragma once

#include <cstddef>
#include <vector>

#include "simplexkit/core.hpp"

namespace simplexkit {

/// The edge-length expression shared by the median, barycentric-circumradius
/// and centroid-distance formulas:
///
///   m * sum_{j != i} |v_i - v_j|^2  -  sum_{p < q; p, q != i} |v_p - v_q|^2
///
/// It equals m^2 |median_i|^2. Values in [-1e-9 * scale, 0) are clamped to 0,
/// where scale is the sum of the two magnitudes; anything more negative throws
/// NegativeRadicand.
double median_radicand(const EdgeProfile& profile, std::size_t i);

/// Relative clamp window for median_radicand.
inline constexpr double kRadicandFloor = 1e-9;

/// |median_i| from edge lengths only.
double median_length(const Simplex& s, std::size_t i);

/// Left side minus right side of the generalized Apollonius identity, with the
/// median measured directly as |v_i - kappa_i|.
double apollonius_residual(const Simplex& s, std::size_t i);

struct CommandinoRatio {
    double barycenter_to_face_centroid = 0.0;  // |kappa - kappa_i|
    double barycenter_to_vertex = 0.0;         // |kappa - v_i|
    /// |v_i - kappa| + |kappa - kappa_i| - |v_i - kappa_i|; zero when collinear.
    double collinearity_residual = 0.0;
};

CommandinoRatio commandino_ratio(const Simplex& s, std::size_t i);

struct MedianReport {
    std::vector<double> median_lengths;        // edge-length formula
    std::vector<double> apollonius_residuals;  // per vertex
    double sum_squares_medians = 0.0;          // direct coordinates
    double sum_squares_center_to_vertices = 0.0;
    double sum_squares_edges = 0.0;

    /// Relative residual of sum |median_i|^2 = (m+1)/m^2 * sum edges^2.
    double median_sum_residual = 0.0;
    /// Relative residual of sum |kappa - v_i|^2 = 1/(m+1) * sum edges^2.
    double center_sum_residual = 0.0;
};

MedianReport median_sums(const Simplex& s);

/// |v_i - kappa_i|^2 + |v_j - kappa_i|^2 - |v_i - v_j|^2 for a regular simplex.
double pythagoras_regular_residual(const Simplex& s, std::size_t i, std::size_t j);

struct CarnotCheck {
    double face_distance_sum = 0.0;  // sum_i |kappa - kappa_i|
    double radii_sum = 0.0;          // |v_0 - kappa| + |kappa - kappa_0|
};

CarnotCheck carnot_regular_check(const Simplex& s);

}  // namespace simplexkit
