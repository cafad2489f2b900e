#include "simplexkit/enclosing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexkit/apollonius.hpp"

namespace simplexkit {

namespace {

// Calls visit(indices) for every k-subset of {0, ..., count-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t count, std::size_t k, Visit&& visit) {
    if (k > count) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t c = 0; c < k; ++c) idx[c] = c;
    while (true) {
        visit(std::span<const std::size_t>(idx));
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == count - k + pos - 1) --pos;
        if (pos == 0) return;
        ++idx[pos - 1];
        for (std::size_t c = pos; c < k; ++c) idx[c] = idx[c - 1] + 1;
    }
}

void check_point_set(std::span<const Point> points, std::size_t n) {
    if (n < 1) throw GeometryError(ErrorKind::InvalidDimension, "dimension must be at least 1");
    for (const Point& p : points)
        if (p.dim() != n)
            throw GeometryError(ErrorKind::DimensionMismatch,
                                "point of dimension " + std::to_string(p.dim()) + " in a set declared R^" +
                                    std::to_string(n));
    if (points.size() < n + 1)
        throw GeometryError(ErrorKind::TooFewPoints, "need at least n+1 = " + std::to_string(n + 1) + " points");
    if (points.size() > kSubsetPointCap)
        throw GeometryError(ErrorKind::CapExceeded, "subset enumeration is limited to " +
                                                        std::to_string(kSubsetPointCap) + " points");
}

std::vector<Point> gather(std::span<const Point> points, std::span<const std::size_t> idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(points[i]);
    return out;
}

}  // namespace

BarycentricCircumradius barycentric_circumradius(const Simplex& s) {
    const EdgeProfile profile(s);
    BarycentricCircumradius out;
    double best = -1.0;
    for (std::size_t i = 0; i < s.vertex_count(); ++i) {
        const double r = median_radicand(profile, i);
        if (r > best) {
            best = r;
            out.argmax = i;
        }
    }
    out.radius = std::sqrt(best) / static_cast<double>(s.vertex_count());
    return out;
}

double jung_bound(double diam, std::size_t n) {
    if (n < 1) throw GeometryError(ErrorKind::InvalidDimension, "Jung bound needs n >= 1");
    if (!(diam > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "diameter must be positive");
    const double nd = static_cast<double>(n);
    return std::sqrt(nd / (2.0 * nd + 2.0)) * diam;
}

double regular_circumradius(std::size_t m, double diam) {
    if (m < 1) throw GeometryError(ErrorKind::InvalidDimension, "regular simplex needs m >= 1");
    return jung_bound(diam, m);
}

EnclosureReport combined_enclosure(const Simplex& s) {
    const EdgeProfile profile(s);
    const BarycentricCircumradius bary = barycentric_circumradius(s);
    const MinimumBall ball = exact_meb(s.vertices());

    EnclosureReport report;
    report.diam = profile.diam();
    report.barycentric_circumradius = bary.radius;
    report.argmax_vertex = bary.argmax;
    report.jung_bound = jung_bound(profile.diam(), s.order());
    report.combined_bound = std::min(report.barycentric_circumradius, report.jung_bound);
    report.meb_radius = ball.radius;
    report.meb_center = ball.center;
    report.barycenter = barycenter(s);
    report.dominance_holds = report.meb_radius <= report.combined_bound + 1e-12 * report.diam;
    return report;
}

double set_barycentric_circumradius(std::span<const Point> points, std::size_t n) {
    check_point_set(points, n);
    double best = -1.0;
    for_each_subset(points.size(), n + 1, [&](std::span<const std::size_t> idx) {
        try {
            const Simplex s = Simplex::validate(gather(points, idx));
            best = std::max(best, barycentric_circumradius(s).radius);
        } catch (const GeometryError& e) {
            if (e.kind() != ErrorKind::Degenerate) throw;
        }
    });
    if (best < 0.0)
        throw GeometryError(ErrorKind::AllDegenerate, "every (n+1)-subset of the point set is degenerate");
    return best;
}

BlumenthalWahlinCheck blumenthal_wahlin_check(std::span<const Point> points, std::size_t n) {
    check_point_set(points, n);
    BlumenthalWahlinCheck out;
    for_each_subset(points.size(), n + 1, [&](std::span<const std::size_t> idx) {
        const std::vector<Point> subset = gather(points, idx);
        out.max_subset_radius = std::max(out.max_subset_radius, exact_meb(subset).radius);
    });
    out.full_radius = exact_meb(points).radius;
    return out;
}

FermatSum fermat_sum_regular(const Simplex& s) {
    require_regular(s);
    const Point kappa = barycenter(s);
    FermatSum out;
    for (const Point& v : s.vertices()) out.coordinate_sum += distance(kappa, v);
    const double m = static_cast<double>(s.order());
    out.closed_form = std::sqrt(m * (m + 1.0) / 2.0) * edge_profile(s).diam();
    return out;
}

}  // namespace simplexkit
