#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simplexkit/core.hpp"

namespace simplexkit {

struct Bisection {
    Simplex lower;  // v_i replaced by the midpoint of the longest edge [v_i, v_j], i < j
    Simplex upper;  // v_j replaced by that midpoint
    IndexPair edge;
};

/// Splits the longest edge (lexicographically first on ties) at its midpoint.
/// Throws Degenerate when a child fails the rank test.
Bisection bisect(const Simplex& s);

/// (sqrt(3)/2)^floor(p/m) * diam0
double kearfott_bound(std::size_t depth, std::size_t m, double diam0);

/// m/(m+1) * kearfott_bound: bound on |x - kappa| for x in the depth-p simplex.
double containment_bound(std::size_t depth, std::size_t m, double diam0);

/// (m/(m+1)) * sqrt(diam^2 - (m-1)/(2m) * shor^2), using the simplex order m.
double error_estimate(const Simplex& s);
double error_estimate(std::size_t m, double diam, double shor);

/// F: R^n -> R^n evaluated at simplex vertices. Must be reentrant.
struct SystemFunction {
    std::size_t dimension = 0;
    std::function<std::vector<double>(std::span<const double>)> evaluate;
    std::string name;
};

/// Built-in systems addressable by name: linear-0.7, no-root-1d, cubic-1d,
/// shifted-identity-2d, separable-3d.
std::optional<SystemFunction> builtin_system(const std::string& name);
std::vector<std::string> builtin_system_names();

enum class ChildChoice { Initial, Lower, Upper };

const char* to_string(ChildChoice choice) noexcept;

struct BisectionStep {
    std::size_t depth = 0;
    ChildChoice choice = ChildChoice::Initial;
    double diam = 0.0;
    double shor = 0.0;
    double error_estimate = 0.0;
    double kearfott_bound = 0.0;
    Point barycenter{0.0};
};

struct BisectionTrace {
    std::vector<BisectionStep> steps;
    Point final_approximation{0.0};
    double final_error_estimate = 0.0;
    bool converged = false;
    double residual_norm = 0.0;  // |F(final_approximation)|_2
    std::size_t evaluations = 0;
};

/// Raised when neither child of a bisection passes the sign test. Carries the
/// trace up to the last accepted simplex.
class NoSignCriterionError : public GeometryError {
public:
    NoSignCriterionError(const std::string& what, BisectionTrace partial)
        : GeometryError(ErrorKind::NoSignCriterion, what), partial_(std::move(partial)) {}

    const BisectionTrace& partial_trace() const noexcept { return partial_; }

private:
    BisectionTrace partial_;
};

/// |f_k| at or below this fraction of (1 + max vertex |F|_inf) counts as both signs.
inline constexpr double kSignZeroTolerance = 1e-12;

/// Generalized bisection for F(x) = 0 on a full-dimensional simplex. A child
/// is admissible when, for every component k, its vertices carry both a
/// non-positive and a non-negative f_k. If both children are admissible the
/// one with the smaller max vertex |F|_inf wins (lower on ties). Stops once
/// the error estimate reaches `tol` or after `max_iter` bisections.
BisectionTrace solve(const SystemFunction& f, const Simplex& start, double tol, std::size_t max_iter);

}  // namespace simplexkit
