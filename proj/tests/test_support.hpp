#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "simplexkit/core.hpp"
#include "simplexkit/corpus.hpp"

namespace simplexkit::testing {

// Oracles here work directly on coordinates and deliberately avoid the
// library's own centroid / distance helpers.

inline std::vector<double> mean_of(const std::vector<std::vector<double>>& rows) {
    std::vector<double> out(rows.front().size(), 0.0);
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.size(); ++k) out[k] += r[k];
    for (double& v : out) v /= static_cast<double>(rows.size());
    return out;
}

inline double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
}

inline std::vector<std::vector<double>> rows_of(const Simplex& s) {
    std::vector<std::vector<double>> rows;
    for (const Point& p : s.vertices()) rows.push_back(p.vector());
    return rows;
}

inline std::vector<double> oracle_barycenter(const Simplex& s) { return mean_of(rows_of(s)); }

inline std::vector<double> oracle_face_centroid(const Simplex& s, std::size_t i) {
    auto rows = rows_of(s);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
    return mean_of(rows);
}

inline double oracle_median(const Simplex& s, std::size_t i) {
    return euclid(s.vertex(i).vector(), oracle_face_centroid(s, i));
}

inline double oracle_diam(const Simplex& s) {
    double d = 0.0;
    const auto rows = rows_of(s);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) d = std::max(d, euclid(rows[i], rows[j]));
    return d;
}

/// Random rotation (Haar via QR with sign fix) plus translation.
struct RigidMotion {
    Eigen::MatrixXd rotation;
    Eigen::VectorXd shift;

    static RigidMotion random(std::size_t n, std::mt19937_64& rng) {
        std::normal_distribution<double> g(0.0, 1.0);
        Eigen::MatrixXd a(n, n);
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) = g(rng);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
        Eigen::MatrixXd q = qr.householderQ();
        const Eigen::MatrixXd rr = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Eigen::Index c = 0; c < q.cols(); ++c)
            if (rr(c, c) < 0) q.col(c) *= -1.0;
        Eigen::VectorXd t(n);
        for (Eigen::Index k = 0; k < t.size(); ++k) t(k) = 5.0 * g(rng);
        return {q, t};
    }

    Point apply(const Point& p) const {
        Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(p.coords().data(), static_cast<Eigen::Index>(p.dim()));
        Eigen::VectorXd y = rotation * x + shift;
        return Point(std::vector<double>(y.data(), y.data() + y.size()));
    }

    Simplex apply(const Simplex& s) const {
        std::vector<Point> out;
        for (const Point& p : s.vertices()) out.push_back(apply(p));
        return Simplex::validate(std::move(out));
    }
};

inline Simplex scaled(const Simplex& s, double factor) {
    std::vector<Point> out;
    for (const Point& p : s.vertices()) {
        std::vector<double> c = p.vector();
        for (double& v : c) v *= factor;
        out.emplace_back(std::move(c));
    }
    return Simplex::validate(std::move(out));
}

inline Simplex make(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<Point> pts;
    for (auto r : rows) pts.emplace_back(std::vector<double>(r));
    return Simplex::validate(std::move(pts));
}

inline Simplex right_triangle() { return make({{0, 0}, {2, 0}, {0, 2}}); }

/// The triangle [kappa, v1, v2] built from the regular unit triangle.
inline Simplex barycenter_triangle() {
    const double h = std::sqrt(3.0) / 2.0;
    return make({{0.5, h / 3.0}, {1.0, 0.0}, {0.5, h}});
}

inline std::vector<Simplex> seeded_corpus(std::uint64_t seed, std::size_t count, std::optional<std::size_t> m = {},
                                          std::optional<std::size_t> n = {}) {
    CorpusOptions options;
    options.seed = seed;
    options.count = count;
    options.m = m;
    options.n = n;
    return generate_corpus(options);
}

}  // namespace simplexkit::testing
