#include "simplexkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_set>

#include <Eigen/Dense>

#include "simplexkit/apollonius.hpp"
#include "simplexkit/enclosing.hpp"

namespace simplexkit {

namespace {

constexpr double kNegativeWeight = -1e-12;

struct AffineFoot {
    Eigen::VectorXd foot;
    Eigen::VectorXd weights;  // barycentric coordinates, sum to 1
    double distance = 0.0;
};

AffineFoot affine_projection(const Eigen::VectorXd& p, const std::vector<const Point*>& verts) {
    const Eigen::Index n = p.size();
    const Eigen::Index k = static_cast<Eigen::Index>(verts.size());
    const Eigen::Map<const Eigen::VectorXd> origin(verts.front()->coords().data(), n);
    AffineFoot out;
    out.weights.resize(k);
    const Eigen::VectorXd offset = p - origin;
    if (k == 1) {
        out.foot = origin;
        out.weights(0) = 1.0;
        out.distance = offset.norm();
        return out;
    }
    Eigen::MatrixXd directions(n, k - 1);
    for (Eigen::Index c = 1; c < k; ++c)
        directions.col(c - 1) = Eigen::Map<const Eigen::VectorXd>(verts[c]->coords().data(), n) - origin;
    const Eigen::VectorXd mu = directions.colPivHouseholderQr().solve(offset);
    // Residual in offset coordinates keeps small distances accurate far from the origin.
    out.distance = (offset - directions * mu).norm();
    out.foot = origin + directions * mu;
    out.weights(0) = 1.0 - mu.sum();
    out.weights.tail(k - 1) = mu;
    return out;
}

class HullProjector {
public:
    HullProjector(const Point& p, std::span<const Point> vertices)
        : p_(Eigen::Map<const Eigen::VectorXd>(p.coords().data(), static_cast<Eigen::Index>(p.dim()))),
          vertices_(vertices) {}

    void visit(std::uint64_t mask) {
        if (!seen_.insert(mask).second) return;
        std::vector<const Point*> active;
        std::vector<std::size_t> ids;
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            if (mask & (std::uint64_t{1} << v)) {
                active.push_back(&vertices_[v]);
                ids.push_back(v);
            }
        }
        const AffineFoot proj = affine_projection(p_, active);
        bool interior = true;
        for (Eigen::Index c = 0; c < proj.weights.size(); ++c) {
            if (proj.weights(c) < kNegativeWeight) {
                interior = false;
                // The minimizer over the hull lies on a facet opposite a
                // vertex whose weight is negative.
                visit(mask & ~(std::uint64_t{1} << ids[static_cast<std::size_t>(c)]));
            }
        }
        if (interior) {
            const double d = proj.distance;
            if (d < best_) {
                best_ = d;
                closest_ = proj.foot;
            }
        }
    }

    HullProjection result() const {
        return {Point(std::vector<double>(closest_.data(), closest_.data() + closest_.size())), best_};
    }

private:
    Eigen::VectorXd p_;
    std::span<const Point> vertices_;
    std::unordered_set<std::uint64_t> seen_;
    double best_ = std::numeric_limits<double>::infinity();
    Eigen::VectorXd closest_;
};

IndexedValue first_minimum(const std::vector<double>& values) {
    const double low = *std::min_element(values.begin(), values.end());
    std::size_t index = 0;
    while (values[index] > low * (1.0 + kFaceTieTolerance)) ++index;
    return {low, index};
}

bool leq(double lhs, double rhs) { return lhs <= rhs + 1e-10 * std::abs(rhs); }

}  // namespace

HullProjection project_onto_hull(const Point& p, std::span<const Point> vertices) {
    if (vertices.empty()) throw GeometryError(ErrorKind::EmptyInput, "projection onto an empty vertex list");
    if (vertices.size() > 63) throw GeometryError(ErrorKind::CapExceeded, "too many face vertices");
    for (const Point& v : vertices)
        if (v.dim() != p.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "point and face dimensions differ");
    HullProjector projector(p, vertices);
    projector.visit((std::uint64_t{1} << vertices.size()) - 1);
    return projector.result();
}

double distance_point_to_face(const Point& p, std::span<const Point> face_vertices) {
    return project_onto_hull(p, face_vertices).distance;
}

double distance_point_to_face(const Point& p, const Simplex& face) {
    return distance_point_to_face(p, face.vertices());
}

IndexedValue barycentric_inradius(const Simplex& s) {
    const Point kappa = barycenter(s);
    std::vector<double> distances;
    for (std::size_t i = 0; i < s.vertex_count(); ++i)
        distances.push_back(distance_point_to_face(kappa, opposite_face_vertices(s, i)));
    return first_minimum(distances);
}

InradiusEstimate barycentric_inradius_estimate(const Simplex& s) {
    const EdgeProfile profile(s);
    const Point kappa = barycenter(s);
    const double m = static_cast<double>(s.order());
    InradiusEstimate out;
    std::vector<double> values;
    for (std::size_t i = 0; i < s.vertex_count(); ++i) {
        const double from_edges = std::sqrt(median_radicand(profile, i)) / (m * (m + 1.0));
        const double from_coords = distance(kappa, face_centroid(s, i));
        out.cross_check_deviation = std::max(out.cross_check_deviation, std::abs(from_edges - from_coords));
        values.push_back(from_edges);
    }
    const IndexedValue best = first_minimum(values);
    out.value = best.value;
    out.index = best.index;
    return out;
}

Thickness thickness(const Simplex& s) {
    const double diam = edge_profile(s).diam();
    return {barycentric_inradius(s).value / diam, barycentric_inradius_estimate(s).value / diam};
}

Incenter exact_inradius_fulldim(const Simplex& s) {
    if (!s.full_dimensional())
        throw GeometryError(ErrorKind::NotFullDimensional, "incenter needs a full-dimensional simplex (m = n)");
    const Eigen::Index n = static_cast<Eigen::Index>(s.ambient_dim());
    Eigen::MatrixXd system(n + 1, n + 1);
    Eigen::VectorXd offsets(n + 1);
    for (std::size_t i = 0; i < s.vertex_count(); ++i) {
        const std::vector<Point> face = opposite_face_vertices(s, i);
        std::vector<const Point*> ptrs;
        for (const Point& v : face) ptrs.push_back(&v);
        const Eigen::Map<const Eigen::VectorXd> apex(s.vertex(i).coords().data(), n);
        const AffineFoot proj = affine_projection(apex, ptrs);
        const Eigen::VectorXd normal = (apex - proj.foot).normalized();  // points inward
        const Eigen::Index row = static_cast<Eigen::Index>(i);
        system.row(row).head(n) = normal.transpose();
        system(row, n) = -1.0;
        offsets(row) = normal.dot(proj.foot);
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(system);
    const auto& sv = svd.singularValues();
    const Eigen::VectorXd solution = system.colPivHouseholderQr().solve(offsets);

    Incenter out{Point(std::vector<double>(solution.data(), solution.data() + n)), solution(n),
                 sv(0) / sv(sv.size() - 1)};
    return out;
}

double regular_width(std::size_t n, double diam) {
    if (n < 1) throw GeometryError(ErrorKind::InvalidDimension, "width needs n >= 1");
    if (!(diam > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "diameter must be positive");
    const double nd = static_cast<double>(n);
    if (n % 2 == 1) return diam * std::sqrt(2.0 / (nd + 1.0));
    return diam * std::sqrt(2.0 * (nd + 1.0)) / std::sqrt(nd * (nd + 2.0));
}

double split_face_distance(const Simplex& s) {
    const std::size_t count = s.vertex_count();
    if (count < 2) throw GeometryError(ErrorKind::InvalidDimension, "split needs at least one edge");
    const std::size_t k = (count + 1) / 2;
    const std::size_t n = s.ambient_dim();
    const Point& a0 = s.vertex(0);
    const Point& b0 = s.vertex(k);
    Eigen::MatrixXd directions(n, count - 2);
    Eigen::VectorXd offset(n);
    for (std::size_t r = 0; r < n; ++r) offset(r) = b0[r] - a0[r];
    Eigen::Index col = 0;
    for (std::size_t t = 1; t < k; ++t, ++col)
        for (std::size_t r = 0; r < n; ++r) directions(r, col) = s.vertex(t)[r] - a0[r];
    for (std::size_t t = k + 1; t < count; ++t, ++col)
        for (std::size_t r = 0; r < n; ++r) directions(r, col) = b0[r] - s.vertex(t)[r];
    if (directions.cols() == 0) return offset.norm();
    const Eigen::VectorXd coeffs = directions.completeOrthogonalDecomposition().solve(offset);
    return (offset - directions * coeffs).norm();
}

double steinhagen_bound(std::size_t n, double inradius) {
    if (n < 1) throw GeometryError(ErrorKind::InvalidDimension, "Steinhagen bound needs n >= 1");
    if (!(inradius > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "inradius must be positive");
    const double nd = static_cast<double>(n);
    if (n % 2 == 1) return 2.0 * std::sqrt(nd) * inradius;
    return 2.0 * (nd + 1.0) / std::sqrt(nd + 2.0) * inradius;
}

std::vector<InequalityCheck> eggleston_suite(const Simplex& s) {
    if (!s.full_dimensional())
        throw GeometryError(ErrorKind::NotFullDimensional, "inequality suite needs a full-dimensional simplex");
    const std::size_t n = s.ambient_dim();
    const double inr = exact_inradius_fulldim(s).radius;
    const double cir = exact_meb(s.vertices()).radius;
    const double diam = edge_profile(s).diam();

    std::vector<InequalityCheck> out;
    auto add = [&](std::string name, double lhs, double rhs) {
        out.push_back({std::move(name), lhs, rhs, leq(lhs, rhs)});
    };
    add("inradius <= circumradius", inr, cir);
    add("diameter <= 2 circumradius", diam, 2.0 * cir);
    add("inradius <= diameter / 2", inr, diam / 2.0);
    add("circumradius <= jung(diameter)", cir, jung_bound(diam, n));
    if (is_regular(s)) {
        const double wid = regular_width(n, diam);
        add("inradius <= width / 2", inr, wid / 2.0);
        add("width <= diameter", wid, diam);
        add("width <= 2 circumradius", wid, 2.0 * cir);
        add("width <= steinhagen(inradius)", wid, steinhagen_bound(n, inr));
    }
    return out;
}

GaleDiameter gale_diameter_check(std::size_t n) {
    if (n < 1) throw GeometryError(ErrorKind::InvalidDimension, "Gale check needs n >= 1");
    const double nd = static_cast<double>(n);
    const double unit_inradius = barycentric_inradius(regular_simplex(n, n, 1.0)).value;
    const Simplex scaled = regular_simplex(n, n, 1.0 / (2.0 * unit_inradius));
    return {std::sqrt(nd * (nd + 1.0) / 2.0), edge_profile(scaled).diam()};
}

MetricsReport compute_metrics(const Simplex& s) {
    const EdgeProfile profile(s);
    const IndexedValue inr = barycentric_inradius(s);
    const InradiusEstimate est = barycentric_inradius_estimate(s);

    MetricsReport report;
    report.diam = profile.diam();
    report.shor = profile.shor();
    report.barycentric_inradius = inr.value;
    report.inradius_face = inr.index;
    report.barycentric_inradius_estimate = est.value;
    report.estimate_face = est.index;
    report.thickness = inr.value / profile.diam();
    report.thickness_estimate = est.value / profile.diam();
    if (s.full_dimensional()) {
        Incenter inc = exact_inradius_fulldim(s);
        report.exact_inradius = inc.radius;
        report.exact_incenter = std::move(inc.center);
        report.incenter_condition_number = inc.condition_number;
    }
    return report;
}

}  // namespace simplexkit
