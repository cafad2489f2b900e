#include "simplexkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "simplexkit/kernels.hpp"

namespace simplexkit {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty())
        throw GeometryError(ErrorKind::InvalidDimension, "point must have at least one coordinate");
    for (double c : coords_)
        if (!std::isfinite(c))
            throw GeometryError(ErrorKind::NonFinite, "point coordinates must be finite");
}

Point Point::zero(std::size_t n) { return Point(std::vector<double>(n, 0.0)); }

double squared_distance(const Point& a, const Point& b) noexcept {
    return kernels::squared_distance(a.coords(), b.coords());
}

double distance(const Point& a, const Point& b) noexcept { return std::sqrt(squared_distance(a, b)); }

Point midpoint(const Point& a, const Point& b) {
    if (a.dim() != b.dim())
        throw GeometryError(ErrorKind::DimensionMismatch, "midpoint of points of unequal dimension");
    std::vector<double> out(a.dim());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = 0.5 * a[k] + 0.5 * b[k];
    return Point(std::move(out));
}

Point centroid(std::span<const Point> points) {
    if (points.empty()) throw GeometryError(ErrorKind::EmptyInput, "centroid of an empty point list");
    const std::size_t n = points.front().dim();
    std::vector<double> acc(n, 0.0);
    for (const Point& p : points) {
        if (p.dim() != n)
            throw GeometryError(ErrorKind::DimensionMismatch, "centroid of points of unequal dimension");
        kernels::axpy(1.0, p.coords(), acc);
    }
    const double inv = 1.0 / static_cast<double>(points.size());
    for (double& c : acc) c *= inv;
    return Point(std::move(acc));
}

Simplex Simplex::validate(std::vector<Point> vertices) {
    if (vertices.size() < 2)
        throw GeometryError(ErrorKind::TooFewPoints, "a simplex needs at least two vertices");
    const std::size_t n = vertices.front().dim();
    for (const Point& p : vertices)
        if (p.dim() != n)
            throw GeometryError(ErrorKind::DimensionMismatch, "vertices have unequal dimension");
    const std::size_t m = vertices.size() - 1;
    if (m > n)
        throw GeometryError(ErrorKind::Degenerate,
                            "degenerate simplex: " + std::to_string(m + 1) + " vertices in R^" +
                                std::to_string(n) + " are affinely dependent");

    Eigen::MatrixXd diff(m, n);
    for (std::size_t k = 1; k <= m; ++k)
        for (std::size_t c = 0; c < n; ++c) diff(k - 1, c) = vertices[k][c] - vertices[0][c];
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
    const auto& sv = svd.singularValues();
    const double largest = sv(0);
    const double smallest = sv(sv.size() - 1);
    if (!(smallest > kRankTolerance * std::max(1.0, largest)))
        throw GeometryError(ErrorKind::Degenerate, "degenerate simplex: vertices are affinely dependent");
    return Simplex(std::move(vertices));
}

const Point& Simplex::vertex(std::size_t i) const {
    if (i >= vertices_.size())
        throw GeometryError(ErrorKind::IndexOutOfRange, "vertex index " + std::to_string(i) + " out of range");
    return vertices_[i];
}

EdgeProfile::EdgeProfile(const Simplex& s) : count_(s.vertex_count()) {
    const std::size_t edges = count_ * (count_ - 1) / 2;
    pairs_.reserve(edges);
    lengths_.reserve(edges);
    squared_.reserve(edges);
    for (std::size_t i = 0; i < count_; ++i) {
        for (std::size_t j = i + 1; j < count_; ++j) {
            const double sq = squared_distance(s.vertex(i), s.vertex(j));
            pairs_.push_back({i, j});
            squared_.push_back(sq);
            lengths_.push_back(std::sqrt(sq));
        }
    }
    diam_ = *std::max_element(lengths_.begin(), lengths_.end());
    shor_ = *std::min_element(lengths_.begin(), lengths_.end());
    // First pair (lexicographic) within the tie tolerance of the extreme value.
    for (std::size_t e = 0; e < lengths_.size(); ++e) {
        if (lengths_[e] >= diam_ * (1.0 - kEdgeTieTolerance)) {
            diam_edge_ = pairs_[e];
            break;
        }
    }
    for (std::size_t e = 0; e < lengths_.size(); ++e) {
        if (lengths_[e] <= shor_ * (1.0 + kEdgeTieTolerance)) {
            shor_edge_ = pairs_[e];
            break;
        }
    }
}

std::size_t EdgeProfile::index_of(std::size_t i, std::size_t j) const {
    if (i == j || i >= count_ || j >= count_)
        throw GeometryError(ErrorKind::IndexOutOfRange, "invalid edge index pair");
    if (i > j) std::swap(i, j);
    // Row i of the strict upper triangle starts after i*(2c - i - 1)/2 entries.
    return i * (2 * count_ - i - 1) / 2 + (j - i - 1);
}

double EdgeProfile::length(std::size_t i, std::size_t j) const { return lengths_[index_of(i, j)]; }

double EdgeProfile::squared_length(std::size_t i, std::size_t j) const { return squared_[index_of(i, j)]; }

double EdgeProfile::sum_squared() const noexcept {
    double acc = 0.0;
    for (double sq : squared_) acc += sq;
    return acc;
}

EdgeProfile edge_profile(const Simplex& s) { return EdgeProfile(s); }

Point barycenter(const Simplex& s) { return centroid(s.vertices()); }

std::vector<Point> opposite_face_vertices(const Simplex& s, std::size_t i) {
    if (i >= s.vertex_count())
        throw GeometryError(ErrorKind::IndexOutOfRange, "face index " + std::to_string(i) + " out of range");
    std::vector<Point> face;
    face.reserve(s.vertex_count() - 1);
    for (std::size_t k = 0; k < s.vertex_count(); ++k)
        if (k != i) face.push_back(s.vertex(k));
    return face;
}

Point face_centroid(const Simplex& s, std::size_t i) {
    const std::vector<Point> face = opposite_face_vertices(s, i);
    return centroid(face);
}

Simplex sub_face(const Simplex& s, std::span<const std::size_t> drop) {
    std::vector<bool> dropped(s.vertex_count(), false);
    for (std::size_t d : drop) {
        if (d >= s.vertex_count())
            throw GeometryError(ErrorKind::IndexOutOfRange, "face index " + std::to_string(d) + " out of range");
        dropped[d] = true;
    }
    std::vector<Point> kept;
    for (std::size_t k = 0; k < s.vertex_count(); ++k)
        if (!dropped[k]) kept.push_back(s.vertex(k));
    if (kept.size() < 2)
        throw GeometryError(ErrorKind::TooFewPoints, "a face must keep at least two vertices");
    return Simplex::validate(std::move(kept));
}

Simplex sub_face(const Simplex& s, std::initializer_list<std::size_t> drop) {
    return sub_face(s, std::span<const std::size_t>(drop.begin(), drop.size()));
}

Simplex regular_simplex(std::size_t m, std::size_t n, double diam) {
    if (m < 1) throw GeometryError(ErrorKind::InvalidDimension, "regular simplex needs m >= 1");
    if (n < m) throw GeometryError(ErrorKind::InvalidDimension, "regular simplex needs n >= m");
    if (!(diam > 0.0) || !std::isfinite(diam))
        throw GeometryError(ErrorKind::InvalidArgument, "diameter must be positive and finite");

    // Scaled basis vectors of R^{m+1} are pairwise diam apart; centre them and
    // express them in an orthonormal basis of their affine hull.
    const double scale = diam / std::sqrt(2.0);
    const Eigen::Index dim = static_cast<Eigen::Index>(m) + 1;
    Eigen::MatrixXd centered = Eigen::MatrixXd::Identity(dim, dim) * scale;
    centered.array() -= scale / static_cast<double>(dim);

    Eigen::MatrixXd directions(dim, static_cast<Eigen::Index>(m));
    for (Eigen::Index k = 1; k < dim; ++k) directions.col(k - 1) = centered.col(k) - centered.col(0);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(directions);
    const Eigen::MatrixXd basis =
        qr.householderQ() * Eigen::MatrixXd::Identity(dim, static_cast<Eigen::Index>(m));

    std::vector<Point> vertices;
    vertices.reserve(m + 1);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const Eigen::VectorXd local = basis.transpose() * centered.col(k);
        std::vector<double> coords(n, 0.0);
        for (std::size_t c = 0; c < m; ++c) coords[c] = local(static_cast<Eigen::Index>(c));
        vertices.emplace_back(std::move(coords));
    }
    return Simplex::validate(std::move(vertices));
}

double volume(const Simplex& s) {
    if (!s.full_dimensional())
        throw GeometryError(ErrorKind::NotFullDimensional, "volume needs a full-dimensional simplex");
    const std::size_t m = s.order();
    Eigen::MatrixXd diff(m, m);
    for (std::size_t k = 1; k <= m; ++k)
        for (std::size_t c = 0; c < m; ++c) diff(k - 1, c) = s.vertex(k)[c] - s.vertex(0)[c];
    double factorial = 1.0;
    for (std::size_t k = 2; k <= m; ++k) factorial *= static_cast<double>(k);
    return std::abs(diff.partialPivLu().determinant()) / factorial;
}

bool is_regular(const Simplex& s, double tolerance) { return edge_profile(s).spread() <= tolerance; }

void require_regular(const Simplex& s) {
    const double spread = edge_profile(s).spread();
    if (!(spread <= kRegularityTolerance))
        throw GeometryError(ErrorKind::NotRegular,
                            "simplex is not regular (relative edge spread " + std::to_string(spread) + ")");
}

}  // namespace simplexkit
