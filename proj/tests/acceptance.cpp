// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Tolerances are fixed here and must not be loosened to make a run pass.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "simplexkit/apollonius.hpp"
#include "simplexkit/bisection.hpp"
#include "simplexkit/core.hpp"
#include "simplexkit/corpus.hpp"
#include "simplexkit/enclosing.hpp"
#include "simplexkit/errors.hpp"
#include "simplexkit/metrics.hpp"
#include "test_support.hpp"

namespace sk = simplexkit;
using sk::Point;
using sk::Simplex;
using namespace simplexkit::testing;

namespace {

constexpr double kApolloniusTol = 1e-9;       // times diam^2
constexpr double kMedianOracleTol = 1e-9;     // times diam
constexpr double kCommandinoTol = 1e-9;       // times diam
constexpr double kMedianSumTol = 1e-9;        // relative
constexpr double kTriangleConstantTol = 1e-12;
constexpr double kGoldenTol = 1e-12;
constexpr double kDominanceSlack = 1e-12;     // times diam
constexpr double kBlumenthalTol = 1e-9;       // relative
constexpr double kInradiusSlack = 1e-12;      // times diam
constexpr double kRegularInradiusTol = 1e-10;
constexpr double kRegularIdentityTol = 1e-10; // relative
constexpr double kKearfottSlack = 1e-12;
constexpr double kVolumeTol = 1e-9;           // relative
constexpr double kSteinhagenTol = 1e-10;
constexpr double kCorpusSeconds = 5.0;
constexpr double kSolverSeconds = 1.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

const std::vector<Simplex>& main_corpus() {
    static const std::vector<Simplex> corpus = seeded_corpus(2024, 1000);
    return corpus;
}

Outcome apollonius_identity() {
    const auto t0 = Clock::now();
    const auto corpus = seeded_corpus(2024, 1000);
    double worst_residual = 0.0;
    double worst_median = 0.0;
    for (const Simplex& s : corpus) {
        const double d = oracle_diam(s);
        for (std::size_t i = 0; i <= s.order(); ++i) {
            worst_residual = std::max(worst_residual, std::abs(sk::apollonius_residual(s, i)) / (d * d));
            worst_median = std::max(worst_median, std::abs(sk::median_length(s, i) - oracle_median(s, i)) / d);
        }
    }
    const double elapsed = seconds_since(t0);
    return {worst_residual <= kApolloniusTol && worst_median <= kMedianOracleTol && elapsed <= kCorpusSeconds,
            "residual/diam^2 " + fmt(worst_residual) + ", median/diam " + fmt(worst_median) + ", " + fmt(elapsed) +
                " s"};
}

Outcome commandino() {
    double worst = 0.0;
    for (const Simplex& s : main_corpus()) {
        const double d = oracle_diam(s);
        const auto rows = rows_of(s);
        const auto kappa = oracle_barycenter(s);
        for (std::size_t i = 0; i <= s.order(); ++i) {
            const double to_vertex = euclid(kappa, rows[i]);
            const double to_face = euclid(kappa, oracle_face_centroid(s, i));
            worst = std::max(worst, std::abs(to_vertex - static_cast<double>(s.order()) * to_face) / d);
            const auto r = sk::commandino_ratio(s, i);
            worst = std::max(worst, std::abs(r.barycenter_to_vertex - s.order() * r.barycenter_to_face_centroid) / d);
        }
    }
    return {worst <= kCommandinoTol, "deviation/diam " + fmt(worst)};
}

Outcome median_sums() {
    double worst = 0.0;
    for (const Simplex& s : main_corpus()) {
        const auto r = sk::median_sums(s);
        worst = std::max({worst, std::abs(r.median_sum_residual), std::abs(r.center_sum_residual)});
    }
    // Triangles: sum of squared medians is 3/4 and sum of squared center distances
    // 1/3 of the sum of squared sides, both from coordinates.
    double worst_triangle = 0.0;
    for (const Simplex& s : seeded_corpus(77, 200, 2)) {
        const auto rows = rows_of(s);
        const auto kappa = oracle_barycenter(s);
        double medians = 0.0, centers = 0.0, sides = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            medians += std::pow(oracle_median(s, i), 2);
            centers += std::pow(euclid(kappa, rows[i]), 2);
            for (std::size_t j = i + 1; j < 3; ++j) sides += std::pow(euclid(rows[i], rows[j]), 2);
        }
        worst_triangle = std::max({worst_triangle, std::abs(medians - 0.75 * sides) / sides,
                                   std::abs(centers - sides / 3.0) / sides});
        const auto r = sk::median_sums(s);
        worst_triangle = std::max(worst_triangle, std::abs(r.sum_squares_medians - 0.75 * r.sum_squares_edges) / sides);
    }
    return {worst <= kMedianSumTol && worst_triangle <= kTriangleConstantTol,
            "corpus relative " + fmt(worst) + ", triangle constants " + fmt(worst_triangle)};
}

Outcome golden_values() {
    std::vector<std::string> misses;
    auto check = [&](const char* what, double got, double want) {
        if (!(std::abs(got - want) <= kGoldenTol)) misses.push_back(std::string(what) + "=" + fmt(got));
    };
    const Simplex tri = sk::regular_simplex(2, 2, 1.0);
    check("triangle beta_cir", sk::barycentric_circumradius(tri).radius, 1.0 / std::sqrt(3.0));

    const Simplex derived = barycenter_triangle();
    const double derived_cir = sk::barycentric_circumradius(derived).radius;
    check("derived beta_cir", derived_cir, std::sqrt(7.0 / 27.0));
    const double jung = sk::jung_bound(oracle_diam(derived), 2);
    check("derived Jung", jung, 1.0 / std::sqrt(3.0));
    if (!(derived_cir < jung)) misses.push_back("derived beta_cir not below Jung");

    const Simplex tet = sk::regular_simplex(3, 3, 1.0);
    for (std::size_t i = 0; i <= 3; ++i) check("tetra median", sk::median_length(tet, i), std::sqrt(2.0 / 3.0));
    check("tetra beta_cir", sk::barycentric_circumradius(tet).radius, std::sqrt(3.0 / 8.0));
    check("tetra beta_inr", sk::barycentric_inradius(tet).value, 1.0 / std::sqrt(24.0));
    check("tetra Fermat", sk::fermat_sum_regular(tet).coordinate_sum, std::sqrt(6.0));
    check("tetra width", sk::regular_width(3, 1.0), std::sqrt(0.5));
    check("tetra split faces", sk::split_face_distance(tet), std::sqrt(0.5));

    std::string detail = misses.empty() ? "all within " + fmt(kGoldenTol) : "";
    for (const auto& m : misses) detail += m + "; ";
    return {misses.empty(), detail};
}

Outcome enclosure_dominance() {
    sk::RandomSource rng(5150);
    double worst = -1e300;
    std::size_t uncertified = 0;
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = rng.integer(1, 6);
        const Simplex s = sk::random_simplex(rng, n, n);
        const auto r = sk::combined_enclosure(s);
        const double bound = std::min(r.barycentric_circumradius, sk::jung_bound(r.diam, n));
        worst = std::max(worst, (r.meb_radius - bound) / r.diam);
        if (!sk::exact_meb(s.vertices()).certified) ++uncertified;
    }
    return {worst <= kDominanceSlack && uncertified == 0,
            "max (meb - bound)/diam " + fmt(worst) + ", uncertified " + std::to_string(uncertified)};
}

Outcome blumenthal_wahlin() {
    sk::RandomSource rng(4242);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = rng.integer(1, 3);
        const std::size_t count = rng.integer(n + 1, 12);
        const auto pts = sk::random_points(rng, count, n);
        const auto check = sk::blumenthal_wahlin_check(pts, n);
        worst = std::max(worst, std::abs(check.max_subset_radius - check.full_radius) / check.full_radius);
    }
    return {worst <= kBlumenthalTol, "relative " + fmt(worst)};
}

Outcome inradius_ordering() {
    sk::RandomSource rng(777);
    double worst = -1e300;
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = rng.integer(1, 6);
        const Simplex s = sk::random_simplex(rng, n, n);
        const double d = oracle_diam(s);
        const double beta = sk::barycentric_inradius(s).value;
        const double estimate = sk::barycentric_inradius_estimate(s).value;
        const double rho = sk::exact_inradius_fulldim(s).radius;
        worst = std::max({worst, (beta - estimate) / d, (beta - rho) / d});
    }
    double worst_regular = 0.0;
    for (std::size_t m = 1; m <= 8; ++m) {
        const Simplex s = sk::regular_simplex(m, m, 1.0);
        const double beta = sk::barycentric_inradius(s).value;
        worst_regular = std::max({worst_regular, std::abs(beta - sk::barycentric_inradius_estimate(s).value),
                                  std::abs(beta - sk::exact_inradius_fulldim(s).radius)});
    }
    return {worst <= kInradiusSlack && worst_regular <= kRegularInradiusTol,
            "max excess/diam " + fmt(worst) + ", regular spread " + fmt(worst_regular)};
}

Outcome carnot_pythagoras() {
    double worst = 0.0;
    for (std::size_t m = 2; m <= 8; ++m) {
        for (double diam : {1.0, 3.5}) {
            const Simplex s = sk::regular_simplex(m, m + 1, diam);
            const auto c = sk::carnot_regular_check(s);
            worst = std::max(worst, std::abs(c.face_distance_sum - c.radii_sum) / c.radii_sum);
            for (std::size_t i = 0; i <= m; ++i)
                for (std::size_t j = 0; j <= m; ++j)
                    if (i != j) worst = std::max(worst, std::abs(sk::pythagoras_regular_residual(s, i, j)) / (diam * diam));
        }
    }
    return {worst <= kRegularIdentityTol, "relative " + fmt(worst)};
}

Outcome kearfott_decay() {
    double worst = -1e300;
    double worst_volume = 0.0;
    std::size_t nodes = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        sk::RandomSource rng(seed);
        const std::size_t m = rng.integer(1, 5);
        const bool full = rng.unit() < 0.5;
        const Simplex drawn = sk::random_simplex(rng, m, full ? m : m + 1);
        // Exact power-of-two rescale to diam0 in [4, 8). The bound is scale free, and
        // this keeps depth-30 pieces of short segments above the absolute rank floor.
        int exponent = 0;
        std::frexp(oracle_diam(drawn), &exponent);
        const Simplex start = scaled(drawn, std::ldexp(1.0, 3 - exponent));
        const double diam0 = oracle_diam(start);

        std::function<void(const Simplex&, std::size_t)> walk = [&](const Simplex& s, std::size_t depth) {
            ++nodes;
            worst = std::max(worst, oracle_diam(s) - sk::kearfott_bound(depth, m, diam0));
            if (depth == 30) return;
            const auto b = sk::bisect(s);
            if (full) {
                const double parent = sk::volume(s);
                worst_volume =
                    std::max(worst_volume, std::abs(sk::volume(b.lower) + sk::volume(b.upper) - parent) / parent);
            }
            if (depth < 10) {
                walk(b.lower, depth + 1);
                walk(b.upper, depth + 1);
            } else {
                walk(rng.unit() < 0.5 ? b.lower : b.upper, depth + 1);
            }
        };
        walk(start, 0);
    }
    return {worst <= kKearfottSlack && worst_volume <= kVolumeTol,
            std::to_string(nodes) + " simplices, max excess " + fmt(worst) + ", volume relative " + fmt(worst_volume)};
}

Outcome solver_convergence() {
    const auto t0 = Clock::now();
    std::string detail;
    bool pass = true;

    const Simplex interval = make({{0.0}, {1.0}});
    const auto linear = sk::solve(*sk::builtin_system("linear-0.7"), interval, 1e-6, 21);
    const double linear_error = std::abs(linear.final_approximation[0] - 0.7);
    pass = pass && linear.converged && linear.final_error_estimate <= 1e-6 && linear.steps.size() - 1 <= 21 &&
           linear.final_error_estimate >= linear_error;
    detail += "1-D " + std::to_string(linear.steps.size() - 1) + " iterations, eps " +
              fmt(linear.final_error_estimate) + " vs error " + fmt(linear_error);

    const Simplex corner_triangle = make({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
    const auto planar = sk::solve(*sk::builtin_system("shifted-identity-2d"), corner_triangle, 1e-5, 200);
    const double planar_error =
        std::hypot(planar.final_approximation[0] - 0.25, planar.final_approximation[1] - 0.25);
    pass = pass && planar.converged && planar.final_error_estimate <= 1e-5 &&
           planar.final_error_estimate >= planar_error;
    detail += "; 2-D " + std::to_string(planar.steps.size() - 1) + " iterations, eps " +
              fmt(planar.final_error_estimate) + " vs error " + fmt(planar_error);

    const double elapsed = seconds_since(t0);
    pass = pass && elapsed <= kSolverSeconds;
    return {pass, detail + "; " + fmt(elapsed) + " s"};
}

Outcome steinhagen_tightness() {
    double worst = 0.0;
    for (std::size_t n : {1, 3, 5, 7}) {
        const double beta = sk::barycentric_inradius(sk::regular_simplex(n, n, 1.0)).value;
        worst = std::max(worst, std::abs(sk::steinhagen_bound(n, beta) - sk::regular_width(n, 1.0)));
    }
    return {worst <= kSteinhagenTol, "max difference " + fmt(worst)};
}

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string command = std::string(SIMPLEXKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism() {
    const std::string data = SIMPLEXKIT_TEST_DATA;
    const std::vector<std::string> invocations{
        "analyze " + data + "/right_triangle.json " + data + "/corner_tetrahedron.json",
        "enclose " + data + "/unit_square.json --variant-jung --bw-check",
        "solve linear-0.7 " + data + "/unit_interval.json --tol 1e-6",
        "regular 5 7 2",
        "corpus --seed 3 --count 20",
    };
    std::size_t identical = 0;
    for (const auto& args : invocations) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        if (a.first == 0 && !a.second.empty() && a == b) ++identical;
    }
    return {identical == invocations.size(),
            std::to_string(identical) + "/" + std::to_string(invocations.size()) + " invocations byte-identical"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"apollonius identity", apollonius_identity},
        {"commandino ratio", commandino},
        {"median sums", median_sums},
        {"golden values", golden_values},
        {"enclosure dominance", enclosure_dominance},
        {"blumenthal-wahlin", blumenthal_wahlin},
        {"inradius ordering", inradius_ordering},
        {"carnot and pythagoras", carnot_pythagoras},
        {"kearfott decay", kearfott_decay},
        {"solver convergence", solver_convergence},
        {"steinhagen tightness", steinhagen_tightness},
        {"determinism", determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failures;
        std::cout << (outcome.pass ? "PASS " : "FAIL ") << index << " " << name << ": " << outcome.detail << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
