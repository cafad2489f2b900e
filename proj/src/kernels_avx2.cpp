// AVX2 (4 x double) kernel variants. Built with -mavx2 -mfma; only reached
// through the dispatch table after a runtime CPU check.

#include "kernels_detail.hpp"

#include <immintrin.h>

namespace simplexkit::kernels::detail {

namespace {

inline double horizontal_sum(__m256d v) noexcept {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    const __m128d swapped = _mm_unpackhi_pd(pair, pair);
    return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

constexpr std::size_t kLanes = 4;

}  // namespace

double squared_distance_avx2(const double* a, const double* b, std::size_t n) noexcept {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double sum = horizontal_sum(acc);
    for (; k < n; ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return sum;
}

double dot_avx2(const double* a, const double* b, std::size_t n) noexcept {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc);
    double sum = horizontal_sum(acc);
    for (; k < n; ++k) sum += a[k] * b[k];
    return sum;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) noexcept {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes) {
        const __m256d vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k));
        _mm256_storeu_pd(y + k, vy);
    }
    for (; k < n; ++k) y[k] += alpha * x[k];
}

void row_squared_distances_avx2(const double* rows, std::size_t count, std::size_t n,
                                const double* center, double* out) noexcept {
    for (std::size_t r = 0; r < count; ++r)
        out[r] = squared_distance_avx2(rows + r * n, center, n);
}

}  // namespace simplexkit::kernels::detail
