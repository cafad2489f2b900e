#include "kernels_detail.hpp"

namespace simplexkit::kernels::detail {

double squared_distance_scalar(const double* a, const double* b, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double d = a[k] - b[k];
        acc += d * d;
    }
    return acc;
}

double dot_scalar(const double* a, const double* b, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += a[k] * b[k];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) noexcept {
    for (std::size_t k = 0; k < n; ++k) y[k] += alpha * x[k];
}

void row_squared_distances_scalar(const double* rows, std::size_t count, std::size_t n,
                                  const double* center, double* out) noexcept {
    for (std::size_t r = 0; r < count; ++r)
        out[r] = squared_distance_scalar(rows + r * n, center, n);
}

}  // namespace simplexkit::kernels::detail
