#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "simplexkit/core.hpp"

namespace simplexkit {

struct BarycentricCircumradius {
    double radius = 0.0;     // beta_cir
    std::size_t argmax = 0;  // vertex farthest from the barycenter
};

/// beta_cir from edge lengths only: max_i sqrt(median_radicand(i)) / (m + 1).
/// The ball around the barycenter with this radius contains the simplex.
BarycentricCircumradius barycentric_circumradius(const Simplex& s);

/// sqrt(n / (2n + 2)) * diam: Jung's bound on the enclosing radius of any set
/// of diameter `diam` in R^n.
double jung_bound(double diam, std::size_t n);

/// sqrt(m / (2m + 2)) * diam for a regular m-simplex.
double regular_circumradius(std::size_t m, double diam);

/// Smallest enclosing ball of a finite point set.
struct MinimumBall {
    Point center;
    double radius = 0.0;
    /// Indices (into the input) of the points that define the ball.
    std::vector<std::size_t> support;
    /// Convex weights expressing the center in terms of the support points.
    std::vector<double> support_weights;
    /// All points inside radius * (1 + 1e-9) and every support weight >= -1e-9.
    bool certified = false;
};

/// Randomized move-to-front construction with a fixed shuffle seed, so equal
/// inputs always give bit-identical balls.
MinimumBall exact_meb(std::span<const Point> points, std::uint64_t seed = 0x5eedULL);

/// sup_{x, y} |x - y| over a point set.
double point_set_diameter(std::span<const Point> points);

struct EnclosureReport {
    double barycentric_circumradius = 0.0;
    double jung_bound = 0.0;
    double combined_bound = 0.0;  // min of the two above
    double meb_radius = 0.0;
    Point meb_center{0.0};
    Point barycenter{0.0};
    std::size_t argmax_vertex = 0;
    double diam = 0.0;
    /// meb_radius <= combined_bound + 1e-12 * diam
    bool dominance_holds = false;
};

/// Jung's bound here uses the simplex order m, since the simplex lies in an
/// m-dimensional affine subspace.
EnclosureReport combined_enclosure(const Simplex& s);

/// Subset enumeration is exponential; inputs above this size are rejected.
inline constexpr std::size_t kSubsetPointCap = 15;

/// Max of barycentric_circumradius over every affinely independent
/// (n+1)-subset of a point set in R^n. Degenerate subsets are skipped.
double set_barycentric_circumradius(std::span<const Point> points, std::size_t n);

struct BlumenthalWahlinCheck {
    double max_subset_radius = 0.0;  // max over (n+1)-subsets of the MEB radius
    double full_radius = 0.0;        // MEB radius of the whole set
};

BlumenthalWahlinCheck blumenthal_wahlin_check(std::span<const Point> points, std::size_t n);

struct FermatSum {
    double coordinate_sum = 0.0;  // sum_i |kappa - v_i|
    double closed_form = 0.0;     // sqrt(m(m+1)/2) * diam
};

/// Requires a regular simplex.
FermatSum fermat_sum_regular(const Simplex& s);

}  // namespace simplexkit
