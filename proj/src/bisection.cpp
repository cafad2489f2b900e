#include "simplexkit/bisection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace simplexkit {

Bisection bisect(const Simplex& s) {
    const EdgeProfile profile(s);
    const IndexPair edge = profile.diam_edge();
    const Point mid = midpoint(s.vertex(edge.i), s.vertex(edge.j));

    std::vector<Point> lower(s.vertices().begin(), s.vertices().end());
    std::vector<Point> upper = lower;
    lower[edge.i] = mid;
    upper[edge.j] = mid;
    return {Simplex::validate(std::move(lower)), Simplex::validate(std::move(upper)), edge};
}

double kearfott_bound(std::size_t depth, std::size_t m, double diam0) {
    if (m < 1) throw GeometryError(ErrorKind::InvalidDimension, "Kearfott bound needs m >= 1");
    const double exponent = static_cast<double>(depth / m);
    return std::pow(std::sqrt(3.0) / 2.0, exponent) * diam0;
}

double containment_bound(std::size_t depth, std::size_t m, double diam0) {
    const double md = static_cast<double>(m);
    return md / (md + 1.0) * kearfott_bound(depth, m, diam0);
}

double error_estimate(std::size_t m, double diam, double shor) {
    if (m < 1) throw GeometryError(ErrorKind::InvalidDimension, "error estimate needs m >= 1");
    const double md = static_cast<double>(m);
    const double radicand = diam * diam - (md - 1.0) / (2.0 * md) * shor * shor;
    if (radicand < 0.0)
        throw GeometryError(ErrorKind::NegativeRadicand, "error estimate radicand is negative (shor > diam?)");
    return md / (md + 1.0) * std::sqrt(radicand);
}

double error_estimate(const Simplex& s) {
    const EdgeProfile profile(s);
    return error_estimate(s.order(), profile.diam(), profile.shor());
}

const char* to_string(ChildChoice choice) noexcept {
    switch (choice) {
        case ChildChoice::Initial: return "initial";
        case ChildChoice::Lower: return "lower";
        case ChildChoice::Upper: return "upper";
    }
    return "unknown";
}

std::vector<std::string> builtin_system_names() {
    return {"linear-0.7", "no-root-1d", "cubic-1d", "shifted-identity-2d"};
}

std::optional<SystemFunction> builtin_system(const std::string& name) {
    using Values = std::vector<double>;
    if (name == "linear-0.7")
        return SystemFunction{1, [](std::span<const double> x) { return Values{x[0] - 0.7}; }, name};
    if (name == "no-root-1d")
        return SystemFunction{1, [](std::span<const double> x) { return Values{x[0] + 10.0}; }, name};
    if (name == "cubic-1d")
        return SystemFunction{
            1, [](std::span<const double> x) { return Values{x[0] * x[0] * x[0] - 2.0 * x[0] - 5.0}; }, name};
    if (name == "shifted-identity-2d")
        return SystemFunction{
            2, [](std::span<const double> x) { return Values{x[0] - 0.25, x[1] - 0.25}; }, name};
    return std::nullopt;
}

namespace {

class CachedSystem {
public:
    explicit CachedSystem(const SystemFunction& f) : f_(f) {}

    const std::vector<double>& at(const Point& x) {
        auto it = cache_.find(x.vector());
        if (it != cache_.end()) return it->second;
        std::vector<double> value = checked_eval(x);
        return cache_.emplace(x.vector(), std::move(value)).first->second;
    }

    std::vector<double> checked_eval(const Point& x) {
        std::vector<double> value = f_.evaluate(x.coords());
        ++evaluations_;
        if (value.size() != f_.dimension)
            throw GeometryError(ErrorKind::EvaluationFailure, f_.name + " returned a value of the wrong dimension");
        for (double v : value)
            if (!std::isfinite(v))
                throw GeometryError(ErrorKind::EvaluationFailure, f_.name + " returned a non-finite value");
        return value;
    }

    std::size_t evaluations() const noexcept { return evaluations_; }

private:
    const SystemFunction& f_;
    std::map<std::vector<double>, std::vector<double>> cache_;
    std::size_t evaluations_ = 0;
};

struct Assessment {
    bool admissible = false;
    double max_residual = 0.0;  // max over vertices of |F|_inf
};

Assessment assess(const Simplex& s, CachedSystem& system, std::size_t dimension) {
    std::vector<const std::vector<double>*> values;
    Assessment out;
    for (const Point& v : s.vertices()) {
        values.push_back(&system.at(v));
        for (double c : *values.back()) out.max_residual = std::max(out.max_residual, std::abs(c));
    }
    const double zero = kSignZeroTolerance * (1.0 + out.max_residual);
    out.admissible = true;
    for (std::size_t k = 0; k < dimension && out.admissible; ++k) {
        bool non_positive = false;
        bool non_negative = false;
        for (const auto* value : values) {
            const double c = (*value)[k];
            non_positive = non_positive || c <= zero;
            non_negative = non_negative || c >= -zero;
        }
        out.admissible = non_positive && non_negative;
    }
    return out;
}

BisectionStep make_step(const Simplex& s, std::size_t depth, ChildChoice choice, std::size_t m, double diam0) {
    const EdgeProfile profile(s);
    BisectionStep step;
    step.depth = depth;
    step.choice = choice;
    step.diam = profile.diam();
    step.shor = profile.shor();
    step.error_estimate = error_estimate(m, step.diam, step.shor);
    step.kearfott_bound = kearfott_bound(depth, m, diam0);
    step.barycenter = barycenter(s);
    return step;
}

}  // namespace

BisectionTrace solve(const SystemFunction& f, const Simplex& start, double tol, std::size_t max_iter) {
    if (!f.evaluate) throw GeometryError(ErrorKind::InvalidArgument, "system has no evaluation function");
    if (f.dimension != start.ambient_dim() || !start.full_dimensional())
        throw GeometryError(ErrorKind::DimensionMismatch,
                            "solver needs an n-simplex in R^n with n = " + std::to_string(f.dimension));
    if (!(tol > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "tolerance must be positive");
    if (max_iter < 1) throw GeometryError(ErrorKind::InvalidArgument, "max_iter must be at least 1");

    const std::size_t m = start.order();
    const double diam0 = edge_profile(start).diam();
    CachedSystem system(f);
    BisectionTrace trace;

    auto finish = [&]() {
        const BisectionStep& last = trace.steps.back();
        trace.final_approximation = last.barycenter;
        trace.final_error_estimate = last.error_estimate;
        trace.converged = last.error_estimate <= tol;
        const std::vector<double> residual = system.checked_eval(trace.final_approximation);
        double sq = 0.0;
        for (double r : residual) sq += r * r;
        trace.residual_norm = std::sqrt(sq);
        trace.evaluations = system.evaluations();
    };

    if (!assess(start, system, f.dimension).admissible) {
        trace.steps.push_back(make_step(start, 0, ChildChoice::Initial, m, diam0));
        finish();
        throw NoSignCriterionError("no sign change on the starting simplex (depth 0)", trace);
    }

    Simplex current = start;
    trace.steps.push_back(make_step(current, 0, ChildChoice::Initial, m, diam0));
    for (std::size_t depth = 1; depth <= max_iter && trace.steps.back().error_estimate > tol; ++depth) {
        Bisection split = bisect(current);
        const Assessment lower = assess(split.lower, system, f.dimension);
        const Assessment upper = assess(split.upper, system, f.dimension);
        ChildChoice choice;
        if (lower.admissible && upper.admissible)
            choice = upper.max_residual < lower.max_residual ? ChildChoice::Upper : ChildChoice::Lower;
        else if (lower.admissible)
            choice = ChildChoice::Lower;
        else if (upper.admissible)
            choice = ChildChoice::Upper;
        else {
            finish();
            throw NoSignCriterionError("neither child passes the sign test at depth " + std::to_string(depth),
                                       trace);
        }
        current = choice == ChildChoice::Lower ? std::move(split.lower) : std::move(split.upper);
        trace.steps.push_back(make_step(current, depth, choice, m, diam0));
    }
    finish();
    return trace;
}

}  // namespace simplexkit
