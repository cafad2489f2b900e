#include "simplexkit/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace simplexkit {

namespace {

constexpr int kMaxDraws = 1000;

}  // namespace

double RandomSource::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t RandomSource::integer(std::size_t lo, std::size_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::size_t>(x % span);
}

Point RandomSource::point(std::size_t n, double range) {
    std::vector<double> coords(n);
    for (double& c : coords) c = uniform(-range, range);
    return Point(std::move(coords));
}

Simplex random_simplex(RandomSource& rng, std::size_t m, std::size_t n, double range) {
    if (m < 1 || n < m) throw GeometryError(ErrorKind::InvalidDimension, "random simplex needs 1 <= m <= n");
    if (!(range > 0.0) || !std::isfinite(range))
        throw GeometryError(ErrorKind::InvalidArgument, "coordinate range must be positive and finite");
    for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
        std::vector<Point> vertices;
        vertices.reserve(m + 1);
        for (std::size_t k = 0; k <= m; ++k) vertices.push_back(rng.point(n, range));
        try {
            return Simplex::validate(std::move(vertices));
        } catch (const GeometryError& e) {
            if (e.kind() != ErrorKind::Degenerate) throw;
        }
    }
    throw GeometryError(ErrorKind::Degenerate, "could not draw a non-degenerate simplex");
}

std::vector<Point> random_points(RandomSource& rng, std::size_t count, std::size_t n, double range) {
    std::vector<Point> points;
    points.reserve(count);
    for (std::size_t k = 0; k < count; ++k) points.push_back(rng.point(n, range));
    return points;
}

std::vector<Simplex> generate_corpus(const CorpusOptions& options) {
    if ((options.m && *options.m < 1) || (options.n && *options.n < 1))
        throw GeometryError(ErrorKind::InvalidDimension, "m and n must be at least 1");
    if (options.m && options.n && *options.m > *options.n)
        throw GeometryError(ErrorKind::InvalidDimension, "m must not exceed n");
    RandomSource rng(options.seed);
    std::vector<Simplex> corpus;
    corpus.reserve(options.count);
    for (std::size_t k = 0; k < options.count; ++k) {
        std::size_t m, n;
        if (options.n) {
            n = *options.n;
            m = options.m ? *options.m : rng.integer(1, std::min(n, kDefaultMaxOrder));
        } else {
            m = options.m ? *options.m : rng.integer(1, kDefaultMaxOrder);
            n = rng.integer(m, std::max(m, kDefaultMaxAmbient));
        }
        corpus.push_back(random_simplex(rng, m, n, options.coord_range));
    }
    return corpus;
}

}  // namespace simplexkit
