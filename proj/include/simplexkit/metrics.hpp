#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplexkit/core.hpp"

namespace simplexkit {

struct HullProjection {
    Point closest;
    double distance = 0.0;
};

/// Nearest point of the convex hull of `vertices` (affinely independent, any
/// count >= 1) to p. Projects onto the affine hull; when some barycentric
/// coordinate of the foot is negative, recurses into the sub-faces that drop
/// one of those vertices and keeps the nearest result.
HullProjection project_onto_hull(const Point& p, std::span<const Point> vertices);

double distance_point_to_face(const Point& p, const Simplex& face);
double distance_point_to_face(const Point& p, std::span<const Point> face_vertices);

struct IndexedValue {
    double value = 0.0;
    std::size_t index = 0;
};

/// Face distances within this relative gap of the minimum count as ties.
inline constexpr double kFaceTieTolerance = 1e-12;

/// beta_inr: min over faces of the distance from the barycenter to the face.
/// Ties go to the smallest face index.
IndexedValue barycentric_inradius(const Simplex& s);

struct InradiusEstimate {
    double value = 0.0;  // min_i |kappa - kappa_i| from edge lengths
    std::size_t index = 0;
    /// max_i of | edge-length value - coordinate value | for |kappa - kappa_i|
    double cross_check_deviation = 0.0;
};

/// Upper bound on beta_inr from the centroid distances
/// |kappa - kappa_i| = sqrt(median_radicand(i)) / (m (m + 1)).
InradiusEstimate barycentric_inradius_estimate(const Simplex& s);

struct Thickness {
    double exact = 0.0;     // beta_inr / diam
    double estimate = 0.0;  // estimated beta_inr / diam
};

Thickness thickness(const Simplex& s);

struct Incenter {
    Point center;
    double radius = 0.0;
    double condition_number = 0.0;  // of the (n+1)x(n+1) equal-distance system
};

inline constexpr double kIllConditioned = 1e8;

/// Point at equal distance r from every facet hyperplane of a full-dimensional
/// simplex, solved directly as a linear system in (c, r).
Incenter exact_inradius_fulldim(const Simplex& s);

/// Width of the regular n-simplex of edge `diam`.
double regular_width(std::size_t n, double diam);

/// Distance between the affine hulls of the first ceil((m+1)/2) vertices and
/// the remaining ones. For a regular simplex this is its width.
double split_face_distance(const Simplex& s);

/// Upper bound on the width of a convex body in R^n with inradius `inradius`.
double steinhagen_bound(std::size_t n, double inradius);

struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

/// Relations between inradius, circumradius, diameter and (for regular
/// simplices only) width of a full-dimensional simplex.
std::vector<InequalityCheck> eggleston_suite(const Simplex& s);

struct GaleDiameter {
    double closed_form = 0.0;  // sqrt(n (n + 1) / 2)
    double numeric = 0.0;      // measured on a regular simplex with inradius 1/2
};

GaleDiameter gale_diameter_check(std::size_t n);

struct MetricsReport {
    double barycentric_inradius = 0.0;
    std::size_t inradius_face = 0;
    double barycentric_inradius_estimate = 0.0;
    std::size_t estimate_face = 0;
    double thickness = 0.0;
    double thickness_estimate = 0.0;
    std::optional<double> exact_inradius;
    std::optional<Point> exact_incenter;
    std::optional<double> incenter_condition_number;
    double diam = 0.0;
    double shor = 0.0;
};

MetricsReport compute_metrics(const Simplex& s);

}  // namespace simplexkit
