#include "simplexkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <future>

#include "simplexkit/apollonius.hpp"
#include "simplexkit/bisection.hpp"
#include "simplexkit/enclosing.hpp"
#include "simplexkit/io.hpp"
#include "simplexkit/metrics.hpp"
#include "simplexkit/report.hpp"

namespace simplexkit::cli {

namespace {

using report::Json;

int exit_for(const GeometryError& e) {
    switch (e.kind()) {
        case ErrorKind::Degenerate:
        case ErrorKind::AllDegenerate:
            return exit_code::kDegenerate;
        case ErrorKind::CapExceeded:
            return exit_code::kCapExceeded;
        case ErrorKind::NoSignCriterion:
            return exit_code::kNoSignCriterion;
        default:
            return exit_code::kInvalidInput;
    }
}

std::string message_for(const GeometryError& e, const std::string& context) {
    std::string prefix = context.empty() ? "" : context + ": ";
    if (e.kind() == ErrorKind::Degenerate) return prefix + e.what() + "\n";
    return prefix + std::string(to_string(e.kind())) + ": " + e.what() + "\n";
}

CommandResult failure(const GeometryError& e, const std::string& context) {
    return {exit_for(e), "", message_for(e, context)};
}

Json payload_of(std::string_view kind) {
    Json payload = Json::object();
    payload["kind"] = std::string(kind);
    return payload;
}

std::string emit(std::string_view command, const std::string& input, Json payload) {
    return report::dump(report::envelope(command, report::digest(input), std::move(payload))) + "\n";
}

CommandResult analyze_one(const std::string& path) {
    try {
        const std::string text = io::read_file(path);
        const Simplex s = io::parse_simplex(text);

        Json payload = payload_of("analysis");
        payload["simplex"] = report::to_json(s);
        payload["edges"] = report::to_json(edge_profile(s));
        payload["median"] = report::to_json(median_sums(s));
        payload["metrics"] = report::to_json(compute_metrics(s));
        payload["enclosure"] = report::to_json(combined_enclosure(s));

        Json commandino = Json::array();
        for (std::size_t i = 0; i < s.vertex_count(); ++i) {
            const CommandinoRatio ratio = commandino_ratio(s, i);
            Json entry = Json::object();
            entry["vertex"] = i;
            entry["barycenter_to_vertex"] = ratio.barycenter_to_vertex;
            entry["barycenter_to_face_centroid"] = ratio.barycenter_to_face_centroid;
            entry["ratio_deviation"] = ratio.barycenter_to_vertex -
                                       static_cast<double>(s.order()) * ratio.barycenter_to_face_centroid;
            entry["collinearity_residual"] = ratio.collinearity_residual;
            commandino.push_back(std::move(entry));
        }
        payload["commandino"] = std::move(commandino);

        if (s.full_dimensional()) {
            Json inequalities = Json::array();
            for (const InequalityCheck& check : eggleston_suite(s)) inequalities.push_back(report::to_json(check));
            payload["inequalities"] = std::move(inequalities);
        }

        const bool regular = is_regular(s);
        payload["regular"] = regular;
        if (regular && s.vertex_count() >= 3) {
            const CarnotCheck carnot = carnot_regular_check(s);
            Json identities = Json::object();
            identities["carnot_face_distance_sum"] = carnot.face_distance_sum;
            identities["carnot_radii_sum"] = carnot.radii_sum;
            double worst = 0.0;
            for (std::size_t i = 0; i < s.vertex_count(); ++i)
                for (std::size_t j = i + 1; j < s.vertex_count(); ++j)
                    worst = std::max(worst, std::abs(pythagoras_regular_residual(s, i, j)));
            identities["pythagoras_max_residual"] = worst;
            payload["regular_identities"] = std::move(identities);
        }
        return {exit_code::kOk, emit("analyze", text, std::move(payload)), ""};
    } catch (const GeometryError& e) {
        return failure(e, path);
    }
}

Json value_row(std::string_view quantity, double closed_form, double computed) {
    Json row = Json::object();
    row["quantity"] = std::string(quantity);
    row["closed_form"] = closed_form;
    row["computed"] = computed;
    row["abs_difference"] = std::abs(closed_form - computed);
    return row;
}

std::optional<std::uint64_t> parse_seed(const std::string& text) {
    std::uint64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
    return value;
}

}  // namespace

CommandResult run_analyze(const AnalyzeOptions& options) {
    if (options.paths.empty()) return {exit_code::kUsage, "", "analyze: no input files\n"};
    std::vector<std::future<CommandResult>> jobs;
    jobs.reserve(options.paths.size());
    for (const std::string& path : options.paths)
        jobs.push_back(std::async(std::launch::async, analyze_one, path));

    CommandResult total;
    for (auto& job : jobs) {
        CommandResult one = job.get();
        total.out += one.out;
        total.err += one.err;
        if (total.exit_code == exit_code::kOk) total.exit_code = one.exit_code;
    }
    return total;
}

CommandResult run_enclose(const EncloseOptions& options) {
    try {
        const std::string text = io::read_file(options.path);
        const std::vector<Point> points = io::parse_point_set(text);
        if (points.empty()) throw GeometryError(ErrorKind::EmptyInput, "point set is empty");
        const std::size_t n = options.n.value_or(points.front().dim());
        for (const Point& p : points)
            if (p.dim() != n)
                throw GeometryError(ErrorKind::DimensionMismatch,
                                    "every point must have " + std::to_string(n) + " coordinates");
        if (points.size() < n + 1)
            throw GeometryError(ErrorKind::TooFewPoints, "need at least n + 1 = " + std::to_string(n + 1) + " points");
        if ((options.variant_jung || options.bw_check) && points.size() > kSubsetPointCap)
            throw GeometryError(ErrorKind::CapExceeded, "subset checks accept at most " +
                                                            std::to_string(kSubsetPointCap) + " points, got " +
                                                            std::to_string(points.size()));

        const MinimumBall ball = exact_meb(points);
        const double diam = point_set_diameter(points);
        const double jung = jung_bound(diam, n);
        double bound = jung;

        Json payload = payload_of("enclosure");
        payload["n"] = n;
        payload["point_count"] = points.size();
        payload["meb"] = report::to_json(ball);
        payload["diameter"] = diam;
        payload["jung_bound"] = jung;
        if (options.variant_jung) {
            const double set_radius = set_barycentric_circumradius(points, n);
            payload["set_barycentric_circumradius"] = set_radius;
            bound = std::min(bound, set_radius);
        }
        if (options.bw_check) {
            const BlumenthalWahlinCheck bw = blumenthal_wahlin_check(points, n);
            Json pair = Json::object();
            pair["max_subset_radius"] = bw.max_subset_radius;
            pair["full_radius"] = bw.full_radius;
            payload["blumenthal_wahlin"] = std::move(pair);
        }
        payload["min_bound"] = bound;
        const bool dominated = ball.radius <= bound + 1e-12 * diam;
        payload["dominance_holds"] = dominated;

        CommandResult result{exit_code::kOk, emit("enclose", text, std::move(payload)), ""};
        if (!dominated) result.err = "warning: enclosing ball exceeds the bound\n";
        return result;
    } catch (const GeometryError& e) {
        return failure(e, options.path);
    }
}

CommandResult run_solve(const SolveOptions& options) {
    const std::optional<SystemFunction> f = builtin_system(options.function);
    if (!f) {
        std::string known;
        for (const std::string& name : builtin_system_names()) known += " " + name;
        return {exit_code::kUnknownFunction, "", "unknown function: " + options.function + " (known:" + known + ")\n"};
    }
    std::string text;
    BisectionTrace trace;
    CommandResult result;
    try {
        text = io::read_file(options.path);
        const Simplex start = io::parse_simplex(text);
        trace = solve(*f, start, options.tol, options.max_iter);
        result.exit_code = trace.converged ? exit_code::kOk : exit_code::kMaxIterations;
        if (!trace.converged) result.err = "maximum iterations reached before the tolerance\n";
    } catch (const NoSignCriterionError& e) {
        trace = e.partial_trace();
        result.exit_code = exit_code::kNoSignCriterion;
        result.err = std::string("no sign criterion: ") + e.what() + "\n";
    } catch (const GeometryError& e) {
        return failure(e, options.path);
    }

    Json payload = payload_of("bisection_trace");
    payload["function"] = options.function;
    payload["tol"] = options.tol;
    payload["max_iter"] = options.max_iter;
    const Json trace_json = report::to_json(trace);
    for (const auto& [key, value] : trace_json.items()) payload[key] = value;
    result.out = emit("solve", text, std::move(payload));

    if (options.trace_path) {
        std::ofstream trace_out(*options.trace_path, std::ios::binary | std::ios::trunc);
        if (!trace_out) {
            result.err += "cannot write trace file: " + *options.trace_path + "\n";
            if (result.exit_code == exit_code::kOk) result.exit_code = exit_code::kInvalidInput;
        }
        for (const BisectionStep& step : trace.steps) trace_out << report::dump(report::to_json(step)) << '\n';
    }
    return result;
}

CommandResult run_regular(const RegularOptions& options) {
    const std::size_t m = options.m;
    const std::size_t n = options.n;
    const double d = options.diam;
    if (m < 1 || n < m)
        return {exit_code::kInvalidInput, "", "regular: need n >= m >= 1, got m=" + std::to_string(m) +
                                                  " n=" + std::to_string(n) + "\n"};
    if (!(d > 0.0) || !std::isfinite(d))
        return {exit_code::kInvalidInput, "", "regular: diameter must be positive and finite\n"};
    try {
        const Simplex s = regular_simplex(m, n, d);
        const double md = static_cast<double>(m);

        Json values = Json::array();
        values.push_back(value_row("median", d * std::sqrt((md + 1.0) / (2.0 * md)), median_length(s, 0)));
        values.push_back(
            value_row("barycentric_circumradius", regular_circumradius(m, d), barycentric_circumradius(s).radius));
        values.push_back(value_row("meb_radius", regular_circumradius(m, d), exact_meb(s.vertices()).radius));
        values.push_back(value_row("jung_bound", jung_bound(d, m), barycentric_circumradius(s).radius));
        const double inradius = d / std::sqrt(2.0 * md * (md + 1.0));
        values.push_back(value_row("barycentric_inradius", inradius, barycentric_inradius(s).value));
        values.push_back(
            value_row("barycentric_inradius_estimate", inradius, barycentric_inradius_estimate(s).value));
        if (s.full_dimensional()) values.push_back(value_row("inradius", inradius, exact_inradius_fulldim(s).radius));
        const FermatSum fermat = fermat_sum_regular(s);
        values.push_back(value_row("fermat_sum", fermat.closed_form, fermat.coordinate_sum));
        values.push_back(value_row("width", regular_width(m, d), split_face_distance(s)));
        values.push_back(value_row("steinhagen_bound", steinhagen_bound(m, inradius),
                                   steinhagen_bound(m, barycentric_inradius(s).value)));
        const GaleDiameter gale = gale_diameter_check(m);
        values.push_back(value_row("gale_unit_inradius_diameter", gale.closed_form, gale.numeric));
        if (m >= 2) {
            const CarnotCheck carnot = carnot_regular_check(s);
            values.push_back(value_row("carnot", carnot.radii_sum, carnot.face_distance_sum));
            values.push_back(value_row("pythagoras_residual", 0.0, pythagoras_regular_residual(s, 0, 1)));
        }

        Json payload = payload_of("regular");
        payload["m"] = m;
        payload["n"] = n;
        payload["diam"] = d;
        payload["simplex"] = report::to_json(s);
        payload["values"] = std::move(values);
        const std::string input = "regular m=" + std::to_string(m) + " n=" + std::to_string(n) + " diam=" +
                                  report::dump(Json(d));
        return {exit_code::kOk, emit("regular", input, std::move(payload)), ""};
    } catch (const GeometryError& e) {
        return failure(e, "regular");
    }
}

CommandResult run_corpus(CorpusOptions options, const std::optional<std::string>& seed_override) {
    if (seed_override) {
        const std::optional<std::uint64_t> seed = parse_seed(*seed_override);
        if (!seed) return {exit_code::kInvalidInput, "", "SIMPLEX_SEED is not an unsigned integer\n"};
        options.seed = *seed;
    }
    try {
        CommandResult result;
        for (const Simplex& s : generate_corpus(options)) result.out += io::simplex_to_json(s) + "\n";
        return result;
    } catch (const GeometryError& e) {
        return failure(e, "corpus");
    }
}

}  // namespace simplexkit::cli
