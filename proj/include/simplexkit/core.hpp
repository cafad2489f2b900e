#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "simplexkit/errors.hpp"

namespace simplexkit {

/// A point of R^n. Coordinates are finite and n >= 1.
class Point {
public:
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

    /// Origin of R^n.
    static Point zero(std::size_t n);

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t k) const noexcept { return coords_[k]; }
    std::span<const double> coords() const noexcept { return coords_; }
    const std::vector<double>& vector() const noexcept { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

double squared_distance(const Point& a, const Point& b) noexcept;
double distance(const Point& a, const Point& b) noexcept;
Point midpoint(const Point& a, const Point& b);
/// Arithmetic mean of a non-empty list of points of equal dimension.
Point centroid(std::span<const Point> points);

/// Unordered vertex pair {i, j}, stored with i < j.
struct IndexPair {
    std::size_t i = 0;
    std::size_t j = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// An m-simplex in R^n, n >= m >= 1, with affinely independent vertices.
/// Vertex order is preserved; every per-vertex result is indexed by it.
class Simplex {
public:
    /// Rank test: the smallest singular value of the m x n difference matrix
    /// must exceed kRankTolerance * max(1, largest singular value).
    static constexpr double kRankTolerance = 1e-9;

    /// Throws DimensionMismatch, TooFewPoints or Degenerate.
    static Simplex validate(std::vector<Point> vertices);

    std::size_t order() const noexcept { return vertices_.size() - 1; }   // m
    std::size_t ambient_dim() const noexcept { return vertices_.front().dim(); }  // n
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const Point& vertex(std::size_t i) const;
    std::span<const Point> vertices() const noexcept { return vertices_; }

    bool full_dimensional() const noexcept { return order() == ambient_dim(); }

private:
    explicit Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {}
    std::vector<Point> vertices_;
};

/// Pairwise edge lengths of a simplex.
class EdgeProfile {
public:
    explicit EdgeProfile(const Simplex& s);

    std::size_t vertex_count() const noexcept { return count_; }
    std::size_t edge_count() const noexcept { return lengths_.size(); }

    double length(std::size_t i, std::size_t j) const;
    double squared_length(std::size_t i, std::size_t j) const;

    /// Pairs in lexicographic order, parallel to lengths().
    const std::vector<IndexPair>& pairs() const noexcept { return pairs_; }
    const std::vector<double>& lengths() const noexcept { return lengths_; }

    double diam() const noexcept { return diam_; }
    double shor() const noexcept { return shor_; }
    IndexPair diam_edge() const noexcept { return diam_edge_; }
    IndexPair shor_edge() const noexcept { return shor_edge_; }

    /// Sum of squared lengths over all edges.
    double sum_squared() const noexcept;
    /// (diam - shor) / diam
    double spread() const noexcept { return (diam_ - shor_) / diam_; }

private:
    std::size_t index_of(std::size_t i, std::size_t j) const;

    std::size_t count_ = 0;
    std::vector<IndexPair> pairs_;
    std::vector<double> lengths_;
    std::vector<double> squared_;
    double diam_ = 0.0;
    double shor_ = 0.0;
    IndexPair diam_edge_{};
    IndexPair shor_edge_{};
};

/// Edges whose lengths differ by at most this relative amount count as tied;
/// ties go to the lexicographically smallest pair.
inline constexpr double kEdgeTieTolerance = 8.0 * 2.220446049250313e-16;

EdgeProfile edge_profile(const Simplex& s);

/// kappa^m: mean of the vertices.
Point barycenter(const Simplex& s);

/// kappa_i^m: centroid of the (m-1)-face opposite vertex i.
Point face_centroid(const Simplex& s, std::size_t i);

/// Face with the listed vertices removed, order preserved. The face must keep
/// at least two vertices.
Simplex sub_face(const Simplex& s, std::span<const std::size_t> drop);
Simplex sub_face(const Simplex& s, std::initializer_list<std::size_t> drop);

/// Vertices of the face opposite vertex i (may be a single vertex when m = 1).
std::vector<Point> opposite_face_vertices(const Simplex& s, std::size_t i);

/// Regular m-simplex of edge length `diam` embedded in R^n, barycenter at the origin.
Simplex regular_simplex(std::size_t m, std::size_t n, double diam);

/// m-dimensional volume; requires a full-dimensional simplex.
double volume(const Simplex& s);

/// Regularity tolerance used by the regular-simplex identities.
inline constexpr double kRegularityTolerance = 1e-9;

bool is_regular(const Simplex& s, double tolerance = kRegularityTolerance);

/// Throws NotRegular unless is_regular(s).
void require_regular(const Simplex& s);

}  // namespace simplexkit
