// Smallest enclosing ball by the move-to-front variant of Welzl's algorithm.
// The recursion depth is bounded by the support size (at most n + 1); each
// candidate ball is the circumball of its support inside the support's
// affine hull.

#include <algorithm>
#include <cmath>
#include <list>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "simplexkit/enclosing.hpp"
#include "simplexkit/kernels.hpp"

namespace simplexkit {

namespace {

constexpr double kContainmentSlack = 1e-12;
constexpr double kCertificateSlack = 1e-9;

class MoveToFrontSolver {
public:
    MoveToFrontSolver(std::span<const Point> points, std::uint64_t seed)
        : dim_(points.front().dim()), rows_(points.size() * dim_), center_(dim_, 0.0) {
        for (std::size_t r = 0; r < points.size(); ++r)
            std::copy(points[r].coords().begin(), points[r].coords().end(), rows_.begin() + r * dim_);
        std::vector<std::size_t> order(points.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        list_.assign(order.begin(), order.end());
    }

    void run() {
        std::vector<std::size_t> support;
        solve(list_.end(), support);
    }

    const std::vector<double>& center() const noexcept { return center_; }
    double squared_radius() const noexcept { return squared_radius_; }
    const std::vector<std::size_t>& support() const noexcept { return support_; }
    std::span<const double> row(std::size_t r) const noexcept {
        return std::span<const double>(rows_).subspan(r * dim_, dim_);
    }
    const std::vector<double>& rows() const noexcept { return rows_; }
    std::size_t dim() const noexcept { return dim_; }

private:
    bool outside(std::size_t r) const noexcept {
        if (squared_radius_ < 0.0) return true;
        const double d2 = kernels::squared_distance(row(r), center_);
        return d2 > squared_radius_ * (1.0 + kContainmentSlack);
    }

    void solve(std::list<std::size_t>::iterator end, std::vector<std::size_t>& support) {
        circumball(support);
        if (support.size() == dim_ + 1) return;
        for (auto it = list_.begin(); it != end;) {
            auto next = std::next(it);
            if (outside(*it)) {
                support.push_back(*it);
                solve(it, support);
                support.pop_back();
                list_.splice(list_.begin(), list_, it);
            }
            it = next;
        }
    }

    // Smallest ball with every support point on its boundary.
    void circumball(const std::vector<std::size_t>& support) {
        support_ = support;
        if (support.empty()) {
            squared_radius_ = -1.0;
            return;
        }
        const auto origin = row(support.front());
        if (support.size() == 1) {
            std::copy(origin.begin(), origin.end(), center_.begin());
            squared_radius_ = 0.0;
            return;
        }
        const Eigen::Index k = static_cast<Eigen::Index>(support.size()) - 1;
        const Eigen::Index n = static_cast<Eigen::Index>(dim_);
        Eigen::MatrixXd directions(n, k);
        for (Eigen::Index c = 0; c < k; ++c) {
            const auto p = row(support[static_cast<std::size_t>(c) + 1]);
            for (Eigen::Index r = 0; r < n; ++r) directions(r, c) = p[r] - origin[r];
        }
        // (p_c - p_0) . (x - p_0) = |p_c - p_0|^2 / 2 with x - p_0 = directions * lambda.
        const Eigen::MatrixXd gram = directions.transpose() * directions;
        const Eigen::VectorXd rhs = 0.5 * gram.diagonal();
        const Eigen::VectorXd lambda = gram.completeOrthogonalDecomposition().solve(rhs);
        const Eigen::VectorXd offset = directions * lambda;
        for (Eigen::Index r = 0; r < n; ++r) center_[r] = origin[r] + offset(r);
        squared_radius_ = 0.0;
        for (std::size_t s : support)
            squared_radius_ = std::max(squared_radius_, kernels::squared_distance(row(s), center_));
    }

    std::size_t dim_;
    std::vector<double> rows_;
    std::list<std::size_t> list_;
    std::vector<double> center_;
    double squared_radius_ = -1.0;
    std::vector<std::size_t> support_;
};

// Convex weights w with sum w_k s_k = center and sum w_k = 1 (least squares).
std::vector<double> support_weights(const MoveToFrontSolver& solver) {
    const auto& support = solver.support();
    const Eigen::Index n = static_cast<Eigen::Index>(solver.dim());
    const Eigen::Index k = static_cast<Eigen::Index>(support.size());
    Eigen::MatrixXd system(n + 1, k);
    Eigen::VectorXd target(n + 1);
    for (Eigen::Index c = 0; c < k; ++c) {
        const auto p = solver.row(support[static_cast<std::size_t>(c)]);
        for (Eigen::Index r = 0; r < n; ++r) system(r, c) = p[r];
        system(n, c) = 1.0;
    }
    for (Eigen::Index r = 0; r < n; ++r) target(r) = solver.center()[r];
    target(n) = 1.0;
    const Eigen::VectorXd w = system.completeOrthogonalDecomposition().solve(target);
    return std::vector<double>(w.data(), w.data() + w.size());
}

}  // namespace

MinimumBall exact_meb(std::span<const Point> points, std::uint64_t seed) {
    if (points.empty()) throw GeometryError(ErrorKind::EmptyInput, "minimum enclosing ball of an empty set");
    const std::size_t n = points.front().dim();
    for (const Point& p : points)
        if (p.dim() != n) throw GeometryError(ErrorKind::DimensionMismatch, "points have unequal dimension");

    MoveToFrontSolver solver(points, seed);
    solver.run();

    MinimumBall ball{Point(solver.center()), std::sqrt(std::max(0.0, solver.squared_radius())), {}, {}, false};
    const std::vector<double> weights = support_weights(solver);
    std::vector<std::pair<std::size_t, double>> zipped;
    for (std::size_t k = 0; k < weights.size(); ++k) zipped.emplace_back(solver.support()[k], weights[k]);
    std::sort(zipped.begin(), zipped.end());
    for (const auto& [index, weight] : zipped) {
        ball.support.push_back(index);
        ball.support_weights.push_back(weight);
    }

    std::vector<double> d2(points.size());
    kernels::row_squared_distances(solver.rows(), n, solver.center(), d2);
    const double limit = ball.radius * (1.0 + kCertificateSlack);
    const bool contained =
        std::all_of(d2.begin(), d2.end(), [&](double v) { return std::sqrt(v) <= limit; });
    const bool in_hull = std::all_of(ball.support_weights.begin(), ball.support_weights.end(),
                                     [](double w) { return w >= -kCertificateSlack; });
    ball.certified = contained && in_hull;
    return ball;
}

double point_set_diameter(std::span<const Point> points) {
    double best = 0.0;
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b)
            best = std::max(best, squared_distance(points[a], points[b]));
    return std::sqrt(best);
}

}  // namespace simplexkit
