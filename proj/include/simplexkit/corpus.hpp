#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "simplexkit/core.hpp"

namespace simplexkit {

// Seeded random simplices. Draws use explicit bit manipulation on mt19937_64
// output rather than the std distributions, so a seed gives the same corpus
// with every standard library.

struct CorpusOptions {
    std::uint64_t seed = 1;
    std::size_t count = 1;
    std::optional<std::size_t> m;  // default: uniform in [1, 8]
    std::optional<std::size_t> n;  // default: uniform in [m, 12]
    double coord_range = 10.0;     // coordinates in [-coord_range, coord_range]
};

inline constexpr std::size_t kDefaultMaxOrder = 8;
inline constexpr std::size_t kDefaultMaxAmbient = 12;

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit();
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    /// Uniform integer in [lo, hi].
    std::size_t integer(std::size_t lo, std::size_t hi);
    Point point(std::size_t n, double range);

private:
    std::mt19937_64 engine_;
};

/// Redraws until the vertices are affinely independent.
Simplex random_simplex(RandomSource& rng, std::size_t m, std::size_t n, double range = 10.0);

std::vector<Point> random_points(RandomSource& rng, std::size_t count, std::size_t n, double range = 10.0);

/// Throws InvalidDimension if a fixed m exceeds a fixed n, or either is zero.
std::vector<Simplex> generate_corpus(const CorpusOptions& options);

}  // namespace simplexkit
